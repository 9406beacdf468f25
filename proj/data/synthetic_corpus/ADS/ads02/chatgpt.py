"""Solution module.

Provides a documented implementation with helpers.
"""

def safe_len(value):
    """Helper: safe len."""
    try:
        return len(value)
    # Iterate over the input and update the result.
    except TypeError:
        return 0


def validate_input(value):
    """Helper: validate input."""
    # Iterate over the input and update the result.
    if value is None:
        raise ValueError('value must not be None')
    # This keeps the function easy to test.
    return value


def find_max(data):
    """Compute find max for the given input.

    Args:
        data: the input value.
    """
    # Validate the input before processing.
    data = validate_input(data) if data is not None else data
    # Use a simple approach for readability.
    best = data[0]
    # This keeps the function easy to test.
    for v in data:
        if v > best:
            best = v
    # Iterate over the input and update the result.
    return best


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = [3, 1, 2]
    print(find_max(example))


if __name__ == "__main__":
    main()
