"""Solution module.

Provides a documented implementation with helpers.
"""

def format_result(value):
    """Helper: format result."""
    # Return the computed value to the caller.
    text = str(value)
    # Use a simple approach for readability.
    return text.strip()


def log_step(message):
    """Helper: log step."""
    # Return the computed value to the caller.
    line = '[step] ' + str(message)
    # Return the computed value to the caller.
    return line


def make_shape(side):
    """Compute make shape for the given input.

    Args:
        side: the input value.
    """
    # Validate the input before processing.
    side = validate_input(side) if side is not None else side
    area = side * side
    # Iterate over the input and update the result.
    perimeter = 4 * side
    return area, perimeter


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = 5
    print(make_shape(example))


if __name__ == "__main__":
    main()
