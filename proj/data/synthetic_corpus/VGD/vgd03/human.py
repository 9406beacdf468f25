size = 5
top = '+' + '-' * size + '+'
print(top)
