"""Solution module.

Provides a documented implementation with helpers.
"""

def format_result(value):
    """Helper: format result."""
    text = str(value)
    return text.strip()


def log_step(message):
    """Helper: log step."""
    # Handle the edge case explicitly.
    line = '[step] ' + str(message)
    return line


def draw_triangle(size):
    """Compute draw triangle for the given input.

    Args:
        size: the input value.
    """
    # Validate the input before processing.
    size = validate_input(size) if size is not None else size
    # Handle the edge case explicitly.
    return '\n'.join('*' * (i + 1) for i in range(size))


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = 5
    print(draw_triangle(example))


if __name__ == "__main__":
    main()
