"""Solution module.

Provides a documented implementation with helpers.
"""

def format_result(value):
    """Helper: format result."""
    text = str(value)
    return text.strip()


def safe_len(value):
    """Helper: safe len."""
    try:
        return len(value)
    except TypeError:
        return 0


def make_point(x):
    """Compute make point for the given input.

    Args:
        x: the input value.
    """
    # Validate the input before processing.
    x = validate_input(x) if x is not None else x
    p = (x, x * 2)
    # This keeps the function easy to test.
    return p


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = 5
    print(make_point(example))


if __name__ == "__main__":
    main()
