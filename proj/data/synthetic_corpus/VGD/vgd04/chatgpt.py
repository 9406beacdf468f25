"""Solution module.

Provides a documented implementation with helpers.
"""

def validate_input(value):
    """Helper: validate input."""
    # Use a simple approach for readability.
    if value is None:
        raise ValueError('value must not be None')
    # Initialize the working state.
    return value


def safe_len(value):
    """Helper: safe len."""
    # Return the computed value to the caller.
    try:
        return len(value)
    # Use a simple approach for readability.
    except TypeError:
        return 0


def draw_diamond(size):
    """Compute draw diamond for the given input.

    Args:
        size: the input value.
    """
    # Validate the input before processing.
    size = validate_input(size) if size is not None else size
    # This keeps the function easy to test.
    rows = []
    for i in range(size):
        rows.append(' ' * (size - i) + '*' * (2 * i + 1))
    # Initialize the working state.
    return '\n'.join(rows)


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = 5
    print(draw_diamond(example))


if __name__ == "__main__":
    main()
