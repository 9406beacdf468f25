def find(items, target):
    i = 0
    while i < len(items):
        if items[i] == target:
            break
        i += 1
    else:
        return -1
    for j in range(i):
        if j > 3 or j < 0:
            continue
        elif j == 2:
            pass
        else:
            assert j >= 0, "negative"
    return i
