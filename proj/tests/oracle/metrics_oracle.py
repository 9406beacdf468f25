#!/usr/bin/env python3
"""Independent oracle for the 14 per-file metrics.

Token classification comes from CPython's own ``tokenize`` module, statement
and definition counts from ``ast``. Nothing here shares code with the C++
lexer. Run with ``--write`` to (re)freeze ``<fixture>.json`` next to every
``.py`` fixture; without it, prints the computed values.
"""

import argparse
import ast
import io
import json
import keyword
import math
import pathlib
import tokenize

CLOSERS = {")", "]", "}"}
LITERAL_KEYWORDS = {"True", "False", "None"}
DECISION_KEYWORDS = {"if", "elif", "for", "while", "except", "assert", "and", "or"}


def physical_lines(src):
    if not src:
        return 0
    return src.count("\n") + (0 if src.endswith("\n") else 1)


def lex(src):
    toks = list(tokenize.generate_tokens(io.StringIO(src).readline))
    skip = {tokenize.NL, tokenize.NEWLINE, tokenize.INDENT, tokenize.DEDENT,
            tokenize.ENDMARKER, tokenize.COMMENT}
    return toks, [t for t in toks if t.type not in skip]


def halstead(code_tokens):
    ops, opnds = [], []
    for t in code_tokens:
        if t.type == tokenize.NAME:
            if t.string in LITERAL_KEYWORDS:
                opnds.append(t.string)
            elif keyword.iskeyword(t.string):
                ops.append(t.string)
            else:
                opnds.append(t.string)
        elif t.type in (tokenize.NUMBER, tokenize.STRING):
            opnds.append(t.string)
        elif t.type == tokenize.OP:
            if t.string not in CLOSERS:
                ops.append(t.string)
        else:
            raise ValueError(f"unexpected token {t}")
    return len(set(ops)), len(set(opnds)), len(ops), len(opnds)


def line_classes(src, toks):
    lines = src.split("\n")
    if src.endswith("\n"):
        lines = lines[:-1]
    if not src:
        lines = []
    inside_string = set()
    for t in toks:
        if t.type == tokenize.STRING and t.end[0] > t.start[0]:
            inside_string.update(range(t.start[0] + 1, t.end[0] + 1))
    out = []
    for number, text in enumerate(lines, start=1):
        stripped = text.strip()
        if not stripped:
            out.append("BLANK")
        elif number not in inside_string and stripped.startswith("#"):
            out.append("COMMENT_ONLY")
        else:
            out.append("CODE")
    return out


def logical_lines(tree, src_lines):
    count = 0
    for node in ast.walk(tree):
        if isinstance(node, ast.stmt):
            count += 1
            count += len(getattr(node, "decorator_list", []))
        if isinstance(node, ast.ExceptHandler):
            count += 1
        if isinstance(node, ast.Try) and node.finalbody:
            count += 1
        orelse = getattr(node, "orelse", None)
        if isinstance(node, (ast.If, ast.For, ast.AsyncFor, ast.While, ast.Try)) and orelse:
            first = orelse[0]
            is_elif = (isinstance(node, ast.If) and isinstance(first, ast.If)
                       and src_lines[first.lineno - 1].lstrip().startswith("elif"))
            if not is_elif:
                count += 1
    return count


def oracle(src):
    toks, code_tokens = lex(src)
    n1, n2, big_n1, big_n2 = halstead(code_tokens)
    vocab, length = n1 + n2, big_n1 + big_n2
    volume = length * math.log2(vocab) if vocab > 0 else 0.0
    difficulty = (n1 / 2.0) * (big_n2 / n2) if n2 > 0 else 0.0
    effort = difficulty * volume
    cc = 1 + sum(1 for t in code_tokens
                 if t.type == tokenize.NAME and t.string in DECISION_KEYWORDS)
    classes = line_classes(src, toks)
    n_lines = physical_lines(src)
    assert len(classes) == n_lines
    sloc = classes.count("CODE")
    tree = ast.parse(src)
    lloc = logical_lines(tree, src.split("\n"))
    n_comments = sum(1 for t in toks if t.type == tokenize.COMMENT)
    n_functions = sum(isinstance(n, (ast.FunctionDef, ast.AsyncFunctionDef))
                      for n in ast.walk(tree))
    n_classes = sum(isinstance(n, ast.ClassDef) for n in ast.walk(tree))
    ratio = n_comments / max(1, n_lines)
    mi = (171 - 5.2 * math.log(max(1.0, volume)) - 0.23 * cc
          - 16.2 * math.log(max(1, sloc)) + 50 * math.sin(math.sqrt(2.4 * ratio)))
    mi = max(0.0, min(100.0, 100.0 * mi / 171.0))
    return {
        "halstead_counts": {"n1": n1, "n2": n2, "N1": big_n1, "N2": big_n2},
        "line_classes": classes,
        "metrics": {
            "cyclomatic_complexity": cc,
            "halstead_difficulty": difficulty,
            "halstead_effort": effort,
            "halstead_volume": volume,
            "halstead_time": effort / 18.0,
            "halstead_bugs": volume / 3000.0,
            "sloc": sloc,
            "lloc": lloc,
            "diff_sloc_lloc": sloc - lloc,
            "n_lines": n_lines,
            "n_comments": n_comments,
            "n_functions": n_functions,
            "n_classes": n_classes,
            "maintainability_index": mi,
        },
    }


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("fixture_dir", type=pathlib.Path)
    parser.add_argument("--write", action="store_true")
    args = parser.parse_args()
    for path in sorted(args.fixture_dir.glob("*.py")):
        result = oracle(path.read_text(encoding="utf-8"))
        result["oracle"] = "cpython tokenize + ast"
        if args.write:
            path.with_suffix(".json").write_text(
                json.dumps(result, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        else:
            print(path.name, json.dumps(result["metrics"]))


if __name__ == "__main__":
    main()
