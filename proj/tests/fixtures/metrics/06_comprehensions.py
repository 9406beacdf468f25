values = [1, 2, 3, 4, 5, 6]
evens = [v for v in values if v % 2 == 0]
pairs = {a: b for a in values for b in values if a < b and b < 4}
label = "big" if len(evens) > 2 else "small"
total = sum(v * v for v in values)
