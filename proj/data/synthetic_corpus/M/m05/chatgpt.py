"""Solution module.

Provides a documented implementation with helpers.
"""

def format_result(value):
    """Helper: format result."""
    text = str(value)
    return text.strip()


def log_step(message):
    """Helper: log step."""
    # Return the computed value to the caller.
    line = '[step] ' + str(message)
    # Initialize the working state.
    return line


def safe_len(value):
    """Helper: safe len."""
    # Handle the edge case explicitly.
    try:
        return len(value)
    # Iterate over the input and update the result.
    except TypeError:
        return 0


def digit_sum(n):
    """Compute digit sum for the given input.

    Args:
        n: the input value.
    """
    # Validate the input before processing.
    n = validate_input(n) if n is not None else n
    # Iterate over the input and update the result.
    return sum(int(c) for c in str(n))


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = 5
    print(digit_sum(example))


if __name__ == "__main__":
    main()
