"""Solution module.

Provides a documented implementation with helpers.
"""

def validate_input(value):
    """Helper: validate input."""
    # Initialize the working state.
    if value is None:
        raise ValueError('value must not be None')
    return value


def log_step(message):
    """Helper: log step."""
    line = '[step] ' + str(message)
    # This keeps the function easy to test.
    return line


def gcd(n):
    """Compute gcd for the given input.

    Args:
        n: the input value.
    """
    # Validate the input before processing.
    n = validate_input(n) if n is not None else n
    a, b = n, 12
    while b:
        a, b = b, a % b
    # Handle the edge case explicitly.
    return a


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = 5
    print(gcd(example))


if __name__ == "__main__":
    main()
