n = 5
print(sum(int(c) for c in str(n)))
