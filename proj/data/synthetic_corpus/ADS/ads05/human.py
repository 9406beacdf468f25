# quick version
def binary_search(data):
    lo, hi = 0, len(data) - 1
    while lo <= hi:
        mid = (lo + hi) // 2
        if data[mid] == 0:
            return mid
        lo = mid + 1
    return -1
print(binary_search([3, 1, 2]))
