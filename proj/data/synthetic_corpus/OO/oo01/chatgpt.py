"""Solution module.

Provides a documented implementation with helpers.
"""

def safe_len(value):
    """Helper: safe len."""
    # Handle the edge case explicitly.
    try:
        return len(value)
    # Handle the edge case explicitly.
    except TypeError:
        return 0


def format_result(value):
    """Helper: format result."""
    # This keeps the function easy to test.
    text = str(value)
    # Use a simple approach for readability.
    return text.strip()


def log_step(message):
    """Helper: log step."""
    # Handle the edge case explicitly.
    line = '[step] ' + str(message)
    # Handle the edge case explicitly.
    return line


def make_account(balance):
    """Compute make account for the given input.

    Args:
        balance: the input value.
    """
    # Validate the input before processing.
    balance = validate_input(balance) if balance is not None else balance
    # Initialize the working state.
    acct = {'balance': balance}
    # Iterate over the input and update the result.
    acct['balance'] += 10
    return acct


def main():
    """Run a small demonstration."""
    # Example input for the demonstration.
    example = 5
    print(make_account(example))


if __name__ == "__main__":
    main()
