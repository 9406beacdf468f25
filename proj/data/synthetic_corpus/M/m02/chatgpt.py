"""Solution module.

Provides a documented implementation with helpers.
"""

def validate_input(value):
    """Helper: validate input."""
    if value is None:
        raise ValueError('value must not be None')
    # Iterate over the input and update the result.
    return value


def log_step(message):
    """Helper: log step."""
    # Iterate over the input and update the result.
    line = '[step] ' + str(message)
    # Iterate over the input and update the result.
    return line


def safe_len(value):
    """Helper: safe len."""
    try:
        return len(value)
    # This keeps the function easy to test.
    except TypeError:
        return 0


def format_result(value):
    """Helper: format result."""
    # Iterate over the input and update the result.
    text = str(value)
    # Use a simple approach for readability.
    return text.strip()


def fibonacci(n):
    """Compute fibonacci for the given input.

    Args:
        n: the input value.
    """
    # Validate the input before processing.
    n = validate_input(n) if n is not None else n
    # Return the computed value to the caller.
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = 5
    print(fibonacci(example))


if __name__ == "__main__":
    main()
