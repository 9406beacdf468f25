def draw_line(size):
    return '-' * size
print(draw_line(5))
