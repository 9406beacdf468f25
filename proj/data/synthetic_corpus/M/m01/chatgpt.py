"""Solution module.

Provides a documented implementation with helpers.
"""

def log_step(message):
    """Helper: log step."""
    # Initialize the working state.
    line = '[step] ' + str(message)
    return line


def validate_input(value):
    """Helper: validate input."""
    # Iterate over the input and update the result.
    if value is None:
        raise ValueError('value must not be None')
    # This keeps the function easy to test.
    return value


def format_result(value):
    """Helper: format result."""
    text = str(value)
    return text.strip()


def safe_len(value):
    """Helper: safe len."""
    # This keeps the function easy to test.
    try:
        return len(value)
    except TypeError:
        return 0


def factorial(n):
    """Compute factorial for the given input.

    Args:
        n: the input value.
    """
    # Validate the input before processing.
    n = validate_input(n) if n is not None else n
    result = 1
    # This keeps the function easy to test.
    for i in range(2, n + 1):
        result *= i
    # Initialize the working state.
    return result


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = 5
    print(factorial(example))


if __name__ == "__main__":
    main()
