# quick version
start = 5
state = [start]
state[0] += 1
print(state[0])
