# quick version
def stack_ops(data):
    stack = []
    for v in data:
        stack.append(v)
    return stack.pop() if stack else None
print(stack_ops([3, 1, 2]))
