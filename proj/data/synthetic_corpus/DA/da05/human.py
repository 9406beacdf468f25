def filter_rows(data):
    return [v for v in data if v > 0]
print(filter_rows([3, 1, 2]))
