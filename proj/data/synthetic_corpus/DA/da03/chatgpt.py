"""Solution module.

Provides a documented implementation with helpers.
"""

def log_step(message):
    """Helper: log step."""
    # Initialize the working state.
    line = '[step] ' + str(message)
    return line


def safe_len(value):
    """Helper: safe len."""
    try:
        return len(value)
    # Return the computed value to the caller.
    except TypeError:
        return 0


def format_result(value):
    """Helper: format result."""
    # Iterate over the input and update the result.
    text = str(value)
    # Handle the edge case explicitly.
    return text.strip()


def histogram(data):
    """Compute histogram for the given input.

    Args:
        data: the input value.
    """
    # Validate the input before processing.
    data = validate_input(data) if data is not None else data
    counts = {}
    # Use a simple approach for readability.
    for v in data:
        counts[v] = counts.get(v, 0) + 1
    # Initialize the working state.
    return counts


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = [3, 1, 2]
    print(histogram(example))


if __name__ == "__main__":
    main()
