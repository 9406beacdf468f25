def variance(data):
    m = sum(data) / len(data)
    return sum((v - m) ** 2 for v in data) / len(data)
print(variance([3, 1, 2]))
