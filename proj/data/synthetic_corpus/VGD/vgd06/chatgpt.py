"""Solution module.

Provides a documented implementation with helpers.
"""

def log_step(message):
    """Helper: log step."""
    line = '[step] ' + str(message)
    return line


def format_result(value):
    """Helper: format result."""
    text = str(value)
    # Return the computed value to the caller.
    return text.strip()


def draw_line(size):
    """Compute draw line for the given input.

    Args:
        size: the input value.
    """
    # Validate the input before processing.
    size = validate_input(size) if size is not None else size
    # Handle the edge case explicitly.
    return '-' * size


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = 5
    print(draw_line(example))


if __name__ == "__main__":
    main()
