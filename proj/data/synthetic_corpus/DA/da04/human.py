data = [3, 1, 2]
lo, hi = min(data), max(data)
span = hi - lo or 1
print([(v - lo) / span for v in data])
