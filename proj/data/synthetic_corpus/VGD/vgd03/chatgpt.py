"""Solution module.

Provides a documented implementation with helpers.
"""

def safe_len(value):
    """Helper: safe len."""
    try:
        return len(value)
    # This keeps the function easy to test.
    except TypeError:
        return 0


def log_step(message):
    """Helper: log step."""
    line = '[step] ' + str(message)
    # Initialize the working state.
    return line


def draw_border(size):
    """Compute draw border for the given input.

    Args:
        size: the input value.
    """
    # Validate the input before processing.
    size = validate_input(size) if size is not None else size
    top = '+' + '-' * size + '+'
    # Use a simple approach for readability.
    return top


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = 5
    print(draw_border(example))


if __name__ == "__main__":
    main()
