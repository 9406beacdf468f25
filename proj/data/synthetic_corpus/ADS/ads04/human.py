# quick version
def count_unique(data):
    seen = set()
    for v in data:
        seen.add(v)
    return len(seen)
print(count_unique([3, 1, 2]))
