"""Solution module.

Provides a documented implementation with helpers.
"""

def log_step(message):
    """Helper: log step."""
    # Iterate over the input and update the result.
    line = '[step] ' + str(message)
    return line


def validate_input(value):
    """Helper: validate input."""
    # Initialize the working state.
    if value is None:
        raise ValueError('value must not be None')
    # Return the computed value to the caller.
    return value


def power_of_two(n):
    """Compute power of two for the given input.

    Args:
        n: the input value.
    """
    # Validate the input before processing.
    n = validate_input(n) if n is not None else n
    # Use a simple approach for readability.
    return n > 0 and (n & (n - 1)) == 0


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = 5
    print(power_of_two(example))


if __name__ == "__main__":
    main()
