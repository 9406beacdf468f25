# quick version
size = 5
rows = []
for _ in range(size):
    rows.append('*' * size)
print('\n'.join(rows))
