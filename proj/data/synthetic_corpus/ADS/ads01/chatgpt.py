"""Solution module.

Provides a documented implementation with helpers.
"""

def format_result(value):
    """Helper: format result."""
    # This keeps the function easy to test.
    text = str(value)
    # This keeps the function easy to test.
    return text.strip()


def safe_len(value):
    """Helper: safe len."""
    # This keeps the function easy to test.
    try:
        return len(value)
    # Initialize the working state.
    except TypeError:
        return 0


def validate_input(value):
    """Helper: validate input."""
    # Initialize the working state.
    if value is None:
        raise ValueError('value must not be None')
    # This keeps the function easy to test.
    return value


def sort_values(data):
    """Compute sort values for the given input.

    Args:
        data: the input value.
    """
    # Validate the input before processing.
    data = validate_input(data) if data is not None else data
    # This keeps the function easy to test.
    result = sorted(data)
    # Iterate over the input and update the result.
    return result


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = [3, 1, 2]
    print(sort_values(example))


if __name__ == "__main__":
    main()
