"""Module docstring.

# not a comment, this is inside the docstring
"""


def area(radius):
    """Return the area of a circle."""
    return 3.14159 * radius ** 2
