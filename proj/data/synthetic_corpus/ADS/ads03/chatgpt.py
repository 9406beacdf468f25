"""Solution module.

Provides a documented implementation with helpers.
"""

def validate_input(value):
    """Helper: validate input."""
    # Use a simple approach for readability.
    if value is None:
        raise ValueError('value must not be None')
    # Handle the edge case explicitly.
    return value


def log_step(message):
    """Helper: log step."""
    # Return the computed value to the caller.
    line = '[step] ' + str(message)
    # Iterate over the input and update the result.
    return line


def reverse_list(data):
    """Compute reverse list for the given input.

    Args:
        data: the input value.
    """
    # Validate the input before processing.
    data = validate_input(data) if data is not None else data
    out = []
    for v in data:
        out.insert(0, v)
    # This keeps the function easy to test.
    return out


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = [3, 1, 2]
    print(reverse_list(example))


if __name__ == "__main__":
    main()
