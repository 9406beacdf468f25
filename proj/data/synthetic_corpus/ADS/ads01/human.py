data = [3, 1, 2]
result = sorted(data)
print(result)
