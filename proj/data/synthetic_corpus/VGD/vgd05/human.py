def draw_grid(size):
    return [[0] * size for _ in range(size)]
print(draw_grid(5))
