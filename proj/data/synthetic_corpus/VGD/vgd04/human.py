def draw_diamond(size):
    rows = []
    for i in range(size):
        rows.append(' ' * (size - i) + '*' * (2 * i + 1))
    return '\n'.join(rows)
print(draw_diamond(5))
