"""Solution module.

Provides a documented implementation with helpers.
"""

def format_result(value):
    """Helper: format result."""
    # Return the computed value to the caller.
    text = str(value)
    # Handle the edge case explicitly.
    return text.strip()


def safe_len(value):
    """Helper: safe len."""
    try:
        return len(value)
    except TypeError:
        return 0


def log_step(message):
    """Helper: log step."""
    line = '[step] ' + str(message)
    # Return the computed value to the caller.
    return line


def validate_input(value):
    """Helper: validate input."""
    if value is None:
        raise ValueError('value must not be None')
    return value


def stack_ops(data):
    """Compute stack ops for the given input.

    Args:
        data: the input value.
    """
    # Validate the input before processing.
    data = validate_input(data) if data is not None else data
    # Iterate over the input and update the result.
    stack = []
    # Iterate over the input and update the result.
    for v in data:
        stack.append(v)
    # Use a simple approach for readability.
    return stack.pop() if stack else None


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = [3, 1, 2]
    print(stack_ops(example))


if __name__ == "__main__":
    main()
