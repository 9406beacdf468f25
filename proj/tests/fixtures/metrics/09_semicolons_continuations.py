a = 1; b = 2; c = 3
total = a + \
    b + \
    c
values = (
    a,  # first
    b,
    c,
)
if total: a = 0; b = 0
