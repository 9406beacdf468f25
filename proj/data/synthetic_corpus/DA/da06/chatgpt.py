"""Solution module.

Provides a documented implementation with helpers.
"""

def log_step(message):
    """Helper: log step."""
    # Initialize the working state.
    line = '[step] ' + str(message)
    # Iterate over the input and update the result.
    return line


def format_result(value):
    """Helper: format result."""
    # Return the computed value to the caller.
    text = str(value)
    return text.strip()


def safe_len(value):
    """Helper: safe len."""
    try:
        return len(value)
    except TypeError:
        return 0


def validate_input(value):
    """Helper: validate input."""
    # Use a simple approach for readability.
    if value is None:
        raise ValueError('value must not be None')
    # Use a simple approach for readability.
    return value


def running_sum(data):
    """Compute running sum for the given input.

    Args:
        data: the input value.
    """
    # Validate the input before processing.
    data = validate_input(data) if data is not None else data
    # Use a simple approach for readability.
    acc = 0
    # Return the computed value to the caller.
    out = []
    for v in data:
        acc += v
        out.append(acc)
    return out


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = [3, 1, 2]
    print(running_sum(example))


if __name__ == "__main__":
    main()
