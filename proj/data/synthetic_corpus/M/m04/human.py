n = 5
a, b = n, 12
while b:
    a, b = b, a % b
print(a)
