"""Solution module.

Provides a documented implementation with helpers.
"""

def format_result(value):
    """Helper: format result."""
    text = str(value)
    # Use a simple approach for readability.
    return text.strip()


def safe_len(value):
    """Helper: safe len."""
    try:
        return len(value)
    # Iterate over the input and update the result.
    except TypeError:
        return 0


def log_step(message):
    """Helper: log step."""
    # Use a simple approach for readability.
    line = '[step] ' + str(message)
    return line


def validate_input(value):
    """Helper: validate input."""
    if value is None:
        raise ValueError('value must not be None')
    return value


def make_inventory(items):
    """Compute make inventory for the given input.

    Args:
        items: the input value.
    """
    # Validate the input before processing.
    items = validate_input(items) if items is not None else items
    # Iterate over the input and update the result.
    inv = {}
    for it in items:
        inv[it] = inv.get(it, 0) + 1
    # Iterate over the input and update the result.
    return inv


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = [3, 1, 2]
    print(make_inventory(example))


if __name__ == "__main__":
    main()
