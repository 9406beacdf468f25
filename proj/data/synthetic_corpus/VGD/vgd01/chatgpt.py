"""Solution module.

Provides a documented implementation with helpers.
"""

def log_step(message):
    """Helper: log step."""
    # Handle the edge case explicitly.
    line = '[step] ' + str(message)
    # Iterate over the input and update the result.
    return line


def format_result(value):
    """Helper: format result."""
    # Return the computed value to the caller.
    text = str(value)
    # Handle the edge case explicitly.
    return text.strip()


def safe_len(value):
    """Helper: safe len."""
    # Iterate over the input and update the result.
    try:
        return len(value)
    # Initialize the working state.
    except TypeError:
        return 0


def draw_square(size):
    """Compute draw square for the given input.

    Args:
        size: the input value.
    """
    # Validate the input before processing.
    size = validate_input(size) if size is not None else size
    # Initialize the working state.
    rows = []
    # This keeps the function easy to test.
    for _ in range(size):
        rows.append('*' * size)
    # Initialize the working state.
    return '\n'.join(rows)


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = 5
    print(draw_square(example))


if __name__ == "__main__":
    main()
