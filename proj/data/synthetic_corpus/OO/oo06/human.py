# quick version
def make_inventory(items):
    inv = {}
    for it in items:
        inv[it] = inv.get(it, 0) + 1
    return inv
print(make_inventory([3, 1, 2]))
