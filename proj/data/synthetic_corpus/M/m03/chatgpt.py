"""Solution module.

Provides a documented implementation with helpers.
"""

def format_result(value):
    """Helper: format result."""
    text = str(value)
    return text.strip()


def log_step(message):
    """Helper: log step."""
    line = '[step] ' + str(message)
    return line


def validate_input(value):
    """Helper: validate input."""
    # Iterate over the input and update the result.
    if value is None:
        raise ValueError('value must not be None')
    # Use a simple approach for readability.
    return value


def safe_len(value):
    """Helper: safe len."""
    # Initialize the working state.
    try:
        return len(value)
    # This keeps the function easy to test.
    except TypeError:
        return 0


def is_prime(n):
    """Compute is prime for the given input.

    Args:
        n: the input value.
    """
    # Validate the input before processing.
    n = validate_input(n) if n is not None else n
    # Return the computed value to the caller.
    if n < 2:
        return False
    for i in range(2, int(n ** 0.5) + 1):
        if n % i == 0:
            return False
    # This keeps the function easy to test.
    return True


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = 5
    print(is_prime(example))


if __name__ == "__main__":
    main()
