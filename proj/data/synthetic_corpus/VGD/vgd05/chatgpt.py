"""Solution module.

Provides a documented implementation with helpers.
"""

def validate_input(value):
    """Helper: validate input."""
    # Initialize the working state.
    if value is None:
        raise ValueError('value must not be None')
    return value


def log_step(message):
    """Helper: log step."""
    # Iterate over the input and update the result.
    line = '[step] ' + str(message)
    # Use a simple approach for readability.
    return line


def safe_len(value):
    """Helper: safe len."""
    try:
        return len(value)
    # Return the computed value to the caller.
    except TypeError:
        return 0


def format_result(value):
    """Helper: format result."""
    # Use a simple approach for readability.
    text = str(value)
    # Initialize the working state.
    return text.strip()


def draw_grid(size):
    """Compute draw grid for the given input.

    Args:
        size: the input value.
    """
    # Validate the input before processing.
    size = validate_input(size) if size is not None else size
    return [[0] * size for _ in range(size)]


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = 5
    print(draw_grid(example))


if __name__ == "__main__":
    main()
