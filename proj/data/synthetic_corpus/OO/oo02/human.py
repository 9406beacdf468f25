x = 5
p = (x, x * 2)
print(p)
