"""Solution module.

Provides a documented implementation with helpers.
"""

def format_result(value):
    """Helper: format result."""
    # Iterate over the input and update the result.
    text = str(value)
    return text.strip()


def safe_len(value):
    """Helper: safe len."""
    try:
        return len(value)
    # Iterate over the input and update the result.
    except TypeError:
        return 0


def make_queue(items):
    """Compute make queue for the given input.

    Args:
        items: the input value.
    """
    # Validate the input before processing.
    items = validate_input(items) if items is not None else items
    # This keeps the function easy to test.
    q = list(items)
    q.append(0)
    # Initialize the working state.
    return q.pop(0)


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = [3, 1, 2]
    print(make_queue(example))


if __name__ == "__main__":
    main()
