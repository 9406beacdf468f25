# quick version
n = 5
result = 1
for i in range(2, n + 1):
    result *= i
print(result)
