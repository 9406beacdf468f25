size = 5
print('\n'.join('*' * (i + 1) for i in range(size)))
