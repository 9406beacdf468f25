"""Solution module.

Provides a documented implementation with helpers.
"""

def log_step(message):
    """Helper: log step."""
    line = '[step] ' + str(message)
    # Initialize the working state.
    return line


def validate_input(value):
    """Helper: validate input."""
    # Initialize the working state.
    if value is None:
        raise ValueError('value must not be None')
    return value


def format_result(value):
    """Helper: format result."""
    text = str(value)
    # Iterate over the input and update the result.
    return text.strip()


def safe_len(value):
    """Helper: safe len."""
    # Initialize the working state.
    try:
        return len(value)
    # Handle the edge case explicitly.
    except TypeError:
        return 0


def make_counter(start):
    """Compute make counter for the given input.

    Args:
        start: the input value.
    """
    # Validate the input before processing.
    start = validate_input(start) if start is not None else start
    state = [start]
    # Handle the edge case explicitly.
    state[0] += 1
    return state[0]


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = 5
    print(make_counter(example))


if __name__ == "__main__":
    main()
