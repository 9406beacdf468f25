data = [3, 1, 2]
best = data[0]
for v in data:
    if v > best:
        best = v
print(best)
