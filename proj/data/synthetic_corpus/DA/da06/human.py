def running_sum(data):
    acc = 0
    out = []
    for v in data:
        acc += v
        out.append(acc)
    return out
print(running_sum([3, 1, 2]))
