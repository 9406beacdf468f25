#!/usr/bin/env python3
"""Generates the bundled synthetic corpus.

Layout: <out>/<CATEGORY>/<id>/{chatgpt.py,human.py}, 6 prompts per category.
The two archetypes differ in comment density, function count and line count.
Output is fully determined by --seed.
"""

import argparse
import random
import shutil
from pathlib import Path

CATEGORIES = ["ADS", "DA", "M", "OO", "VGD"]
PER_CATEGORY = 6

# Small task bodies. Each is (name, argument, body lines using `data`).
TASKS = {
    "ADS": [
        ("sort_values", "data", ["result = sorted(data)", "return result"]),
        ("find_max", "data", ["best = data[0]", "for v in data:", "    if v > best:", "        best = v", "return best"]),
        ("reverse_list", "data", ["out = []", "for v in data:", "    out.insert(0, v)", "return out"]),
        ("count_unique", "data", ["seen = set()", "for v in data:", "    seen.add(v)", "return len(seen)"]),
        ("binary_search", "data", ["lo, hi = 0, len(data) - 1", "while lo <= hi:", "    mid = (lo + hi) // 2",
                                   "    if data[mid] == 0:", "        return mid", "    lo = mid + 1", "return -1"]),
        ("stack_ops", "data", ["stack = []", "for v in data:", "    stack.append(v)", "return stack.pop() if stack else None"]),
    ],
    "DA": [
        ("mean_value", "data", ["total = sum(data)", "return total / len(data) if data else 0.0"]),
        ("variance", "data", ["m = sum(data) / len(data)", "return sum((v - m) ** 2 for v in data) / len(data)"]),
        ("histogram", "data", ["counts = {}", "for v in data:", "    counts[v] = counts.get(v, 0) + 1", "return counts"]),
        ("normalize", "data", ["lo, hi = min(data), max(data)", "span = hi - lo or 1", "return [(v - lo) / span for v in data]"]),
        ("filter_rows", "data", ["return [v for v in data if v > 0]"]),
        ("running_sum", "data", ["acc = 0", "out = []", "for v in data:", "    acc += v", "    out.append(acc)", "return out"]),
    ],
    "M": [
        ("factorial", "n", ["result = 1", "for i in range(2, n + 1):", "    result *= i", "return result"]),
        ("fibonacci", "n", ["a, b = 0, 1", "for _ in range(n):", "    a, b = b, a + b", "return a"]),
        ("is_prime", "n", ["if n < 2:", "    return False", "for i in range(2, int(n ** 0.5) + 1):",
                           "    if n % i == 0:", "        return False", "return True"]),
        ("gcd", "n", ["a, b = n, 12", "while b:", "    a, b = b, a % b", "return a"]),
        ("digit_sum", "n", ["return sum(int(c) for c in str(n))"]),
        ("power_of_two", "n", ["return n > 0 and (n & (n - 1)) == 0"]),
    ],
    "OO": [
        ("make_account", "balance", ["acct = {'balance': balance}", "acct['balance'] += 10", "return acct"]),
        ("make_point", "x", ["p = (x, x * 2)", "return p"]),
        ("make_counter", "start", ["state = [start]", "state[0] += 1", "return state[0]"]),
        ("make_queue", "items", ["q = list(items)", "q.append(0)", "return q.pop(0)"]),
        ("make_shape", "side", ["area = side * side", "perimeter = 4 * side", "return area, perimeter"]),
        ("make_inventory", "items", ["inv = {}", "for it in items:", "    inv[it] = inv.get(it, 0) + 1", "return inv"]),
    ],
    "VGD": [
        ("draw_square", "size", ["rows = []", "for _ in range(size):", "    rows.append('*' * size)", "return '\\n'.join(rows)"]),
        ("draw_triangle", "size", ["return '\\n'.join('*' * (i + 1) for i in range(size))"]),
        ("draw_border", "size", ["top = '+' + '-' * size + '+'", "return top"]),
        ("draw_diamond", "size", ["rows = []", "for i in range(size):", "    rows.append(' ' * (size - i) + '*' * (2 * i + 1))",
                                  "return '\\n'.join(rows)"]),
        ("draw_grid", "size", ["return [[0] * size for _ in range(size)]"]),
        ("draw_line", "size", ["return '-' * size"]),
    ],
}

HELPERS = [
    ("validate_input", "value", ["if value is None:", "    raise ValueError('value must not be None')", "return value"]),
    ("format_result", "value", ["text = str(value)", "return text.strip()"]),
    ("log_step", "message", ["line = '[step] ' + str(message)", "return line"]),
    ("safe_len", "value", ["try:", "    return len(value)", "except TypeError:", "    return 0"]),
]

COMMENTS = [
    "Initialize the working state.",
    "Iterate over the input and update the result.",
    "Handle the edge case explicitly.",
    "Return the computed value to the caller.",
    "This keeps the function easy to test.",
    "Use a simple approach for readability.",
]


def indent(lines, prefix="    "):
    return [prefix + l if l else l for l in lines]


def commented_body(body, rng):
    out = []
    for line in body:
        if not line.startswith(" ") and rng.random() < 0.6:
            out.append("# " + rng.choice(COMMENTS))
        out.append(line)
    return out


def chatgpt_style(task, rng):
    name, arg, body = task
    lines = ['"""Solution module.', "", "Provides a documented implementation with helpers.", '"""', ""]
    helpers = rng.sample(HELPERS, rng.randint(2, 4))
    for hname, harg, hbody in helpers:
        lines.append(f"def {hname}({harg}):")
        lines.append(f'    """Helper: {hname.replace("_", " ")}."""')
        lines += indent(commented_body(hbody, rng))
        lines += ["", ""]
    lines.append(f"def {name}({arg}):")
    lines.append(f'    """Compute {name.replace("_", " ")} for the given input.')
    lines.append("")
    lines.append(f"    Args:\n        {arg}: the input value.")
    lines.append('    """')
    lines.append(f"    # Validate the input before processing.")
    lines.append(f"    {arg} = validate_input({arg}) if {arg} is not None else {arg}")
    lines += indent(commented_body(body, rng))
    lines += ["", ""]
    lines.append("def main():")
    lines.append('    """Run a small demonstration."""')
    lines.append("    # Example input for the demonstration.")
    sample = "[3, 1, 2]" if arg in ("data", "items") else "5"
    lines.append(f"    example = {sample}")
    lines.append(f"    print({name}(example))")
    lines += ["", ""]
    lines.append('if __name__ == "__main__":')
    lines.append("    main()")
    return "\n".join(lines) + "\n"


def human_style(task, rng):
    name, arg, body = task
    lines = []
    if rng.random() < 0.3:
        lines.append("# quick version")
    if rng.random() < 0.5:
        lines.append(f"def {name}({arg}):")
        lines += indent(body)
        sample = "[3, 1, 2]" if arg in ("data", "items") else "5"
        lines.append(f"print({name}({sample}))")
    else:
        sample = "[3, 1, 2]" if arg in ("data", "items") else "5"
        lines.append(f"{arg} = {sample}")
        # Inline the body: turn returns into prints.
        for line in body:
            stripped = line.lstrip()
            pad = line[: len(line) - len(stripped)]
            if stripped.startswith("return "):
                line = pad + "print(" + stripped[len("return "):] + ")"
            lines.append(line)
    return "\n".join(lines) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="data/synthetic_corpus")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    out = Path(args.out)
    if out.exists():
        shutil.rmtree(out)
    for cat in CATEGORIES:
        for i, task in enumerate(TASKS[cat][:PER_CATEGORY]):
            d = out / cat / f"{cat.lower()}{i + 1:02d}"
            d.mkdir(parents=True)
            (d / "chatgpt.py").write_text(chatgpt_style(task, rng))
            (d / "human.py").write_text(human_style(task, rng))


if __name__ == "__main__":
    main()
