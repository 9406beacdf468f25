# quick version
data = [3, 1, 2]
counts = {}
for v in data:
    counts[v] = counts.get(v, 0) + 1
print(counts)
