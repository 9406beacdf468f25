"""Solution module.

Provides a documented implementation with helpers.
"""

def format_result(value):
    """Helper: format result."""
    text = str(value)
    # This keeps the function easy to test.
    return text.strip()


def safe_len(value):
    """Helper: safe len."""
    # Use a simple approach for readability.
    try:
        return len(value)
    # Initialize the working state.
    except TypeError:
        return 0


def filter_rows(data):
    """Compute filter rows for the given input.

    Args:
        data: the input value.
    """
    # Validate the input before processing.
    data = validate_input(data) if data is not None else data
    return [v for v in data if v > 0]


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = [3, 1, 2]
    print(filter_rows(example))


if __name__ == "__main__":
    main()
