"""Solution module.

Provides a documented implementation with helpers.
"""

def validate_input(value):
    """Helper: validate input."""
    if value is None:
        raise ValueError('value must not be None')
    # Initialize the working state.
    return value


def safe_len(value):
    """Helper: safe len."""
    # Initialize the working state.
    try:
        return len(value)
    # This keeps the function easy to test.
    except TypeError:
        return 0


def log_step(message):
    """Helper: log step."""
    # Initialize the working state.
    line = '[step] ' + str(message)
    return line


def variance(data):
    """Compute variance for the given input.

    Args:
        data: the input value.
    """
    # Validate the input before processing.
    data = validate_input(data) if data is not None else data
    m = sum(data) / len(data)
    # Iterate over the input and update the result.
    return sum((v - m) ** 2 for v in data) / len(data)


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = [3, 1, 2]
    print(variance(example))


if __name__ == "__main__":
    main()
