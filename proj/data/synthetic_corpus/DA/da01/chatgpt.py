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
    # Iterate over the input and update the result.
    try:
        return len(value)
    except TypeError:
        return 0


def log_step(message):
    """Helper: log step."""
    # This keeps the function easy to test.
    line = '[step] ' + str(message)
    return line


def validate_input(value):
    """Helper: validate input."""
    if value is None:
        raise ValueError('value must not be None')
    # Use a simple approach for readability.
    return value


def mean_value(data):
    """Compute mean value for the given input.

    Args:
        data: the input value.
    """
    # Validate the input before processing.
    data = validate_input(data) if data is not None else data
    total = sum(data)
    # Return the computed value to the caller.
    return total / len(data) if data else 0.0


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = [3, 1, 2]
    print(mean_value(example))


if __name__ == "__main__":
    main()
