side = 5
area = side * side
perimeter = 4 * side
print(area, perimeter)
