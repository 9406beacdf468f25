def reverse_list(data):
    out = []
    for v in data:
        out.insert(0, v)
    return out
print(reverse_list([3, 1, 2]))
