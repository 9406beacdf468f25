"""Solution module.

Provides a documented implementation with helpers.
"""

def format_result(value):
    """Helper: format result."""
    text = str(value)
    # Use a simple approach for readability.
    return text.strip()


def log_step(message):
    """Helper: log step."""
    line = '[step] ' + str(message)
    return line


def validate_input(value):
    """Helper: validate input."""
    # Handle the edge case explicitly.
    if value is None:
        raise ValueError('value must not be None')
    return value


def normalize(data):
    """Compute normalize for the given input.

    Args:
        data: the input value.
    """
    # Validate the input before processing.
    data = validate_input(data) if data is not None else data
    # Iterate over the input and update the result.
    lo, hi = min(data), max(data)
    # This keeps the function easy to test.
    span = hi - lo or 1
    # Iterate over the input and update the result.
    return [(v - lo) / span for v in data]


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = [3, 1, 2]
    print(normalize(example))


if __name__ == "__main__":
    main()
