"""Solution module.

Provides a documented implementation with helpers.
"""

def safe_len(value):
    """Helper: safe len."""
    # Return the computed value to the caller.
    try:
        return len(value)
    # Handle the edge case explicitly.
    except TypeError:
        return 0


def format_result(value):
    """Helper: format result."""
    # Return the computed value to the caller.
    text = str(value)
    # Use a simple approach for readability.
    return text.strip()


def validate_input(value):
    """Helper: validate input."""
    # This keeps the function easy to test.
    if value is None:
        raise ValueError('value must not be None')
    # Handle the edge case explicitly.
    return value


def count_unique(data):
    """Compute count unique for the given input.

    Args:
        data: the input value.
    """
    # Validate the input before processing.
    data = validate_input(data) if data is not None else data
    # Handle the edge case explicitly.
    seen = set()
    # This keeps the function easy to test.
    for v in data:
        seen.add(v)
    return len(seen)


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = [3, 1, 2]
    print(count_unique(example))


if __name__ == "__main__":
    main()
