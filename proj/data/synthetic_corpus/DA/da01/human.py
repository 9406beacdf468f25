def mean_value(data):
    total = sum(data)
    return total / len(data) if data else 0.0
print(mean_value([3, 1, 2]))
