def make_queue(items):
    q = list(items)
    q.append(0)
    return q.pop(0)
print(make_queue([3, 1, 2]))
