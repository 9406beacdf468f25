mask = 0xFF & 0b1010 | 0o17 ^ ~1
big = 1_000_000 // 3 % 7
sci = 6.02e23 * 1.5E-3 + .5 - 2.
z = 3j * 2
x = 10
x += 1; x -= 2; x *= 3; x //= 2; x **= 2
x >>= 1; x <<= 2; x %= 5; x &= 7; x |= 8; x ^= 1
ok = x != 3 and x >= 0 or not x <= -1
if (n := len([1, 2])) > 1:
    print(n, ok is not None, x in [1, 2])
