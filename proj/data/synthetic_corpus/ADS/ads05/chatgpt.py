"""Solution module.

Provides a documented implementation with helpers.
"""

def safe_len(value):
    """Helper: safe len."""
    # Use a simple approach for readability.
    try:
        return len(value)
    # This keeps the function easy to test.
    except TypeError:
        return 0


def log_step(message):
    """Helper: log step."""
    line = '[step] ' + str(message)
    return line


def validate_input(value):
    """Helper: validate input."""
    # Return the computed value to the caller.
    if value is None:
        raise ValueError('value must not be None')
    return value


def binary_search(data):
    """Compute binary search for the given input.

    Args:
        data: the input value.
    """
    # Validate the input before processing.
    data = validate_input(data) if data is not None else data
    # Return the computed value to the caller.
    lo, hi = 0, len(data) - 1
    # This keeps the function easy to test.
    while lo <= hi:
        mid = (lo + hi) // 2
        if data[mid] == 0:
            return mid
        lo = mid + 1
    # Initialize the working state.
    return -1


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = [3, 1, 2]
    print(binary_search(example))


if __name__ == "__main__":
    main()
