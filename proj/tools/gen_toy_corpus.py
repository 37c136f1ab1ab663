#!/usr/bin/env python3
"""Writes the 64-function toy corpus (32 C++ + 32 Rust) used for overfit runs.

Each function is a small integer expression over two arguments, so the
size-optimized IR stays a handful of instructions long.
"""
import argparse
import pathlib
import random

OPS = ["+", "-", "*", "&", "|", "^"]


def expressions(rng, n):
    seen, out = set(), []
    while len(out) < n:
        op1, op2 = rng.choice(OPS), rng.choice(OPS)
        c = rng.randint(2, 9)
        shape = rng.randint(0, 2)
        if shape == 0:
            e = f"a {op1} b {op2} {c}"
        elif shape == 1:
            e = f"(a {op1} {c}) {op2} b"
        else:
            e = f"a {op1} (b {op2} {c})"
        if e in seen:
            continue
        seen.add(e)
        out.append(e)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="data/toy/src")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    cpp, rust = [], []
    for i, e in enumerate(expressions(rng, 32)):
        cpp.append(f"int f{i}(int a, int b) {{ return {e}; }}\n")
    for i, e in enumerate(expressions(rng, 32)):
        rust.append(f"fn g{i}(a: i32, b: i32) -> i32 {{ {e} }}\n")
    (out / "toy.cpp").write_text("".join(cpp))
    (out / "toy.rs").write_text("".join(rust))


if __name__ == "__main__":
    main()
