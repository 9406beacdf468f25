import functools

square = lambda x: x * x


@functools.lru_cache(maxsize=None)
def fib(n):
    return n if n < 2 else fib(n - 1) + fib(n - 2)


async def fetch(session, url):
    async with session.get(url) as resp:
        return await resp.text()

key = sorted([3, 1, 2], key=lambda v: -v)
