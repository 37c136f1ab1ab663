#!/usr/bin/env python3
"""Writes the C++ and Rust sources behind the normalizer fixture corpus.

The functions cover loops, branches, switches, recursion, pointer and slice
access, floating point and namespaced (mangled) symbols, so the frontends emit
IR with phi nodes, multiple blocks and switch tables. Compile them with
`irtrans build-corpus data/irfix/src --out tests/fixtures/irnorm/frontend`.
"""
import argparse
import pathlib
import random

CPP_OPS = ["+", "-", "*", "^", "|", "&"]
CMP = ["<", ">", "<=", ">=", "==", "!="]


def cpp_functions(rng, per_family):
    out = []
    for k in range(per_family):
        c1, c2, c3 = rng.randint(1, 40), rng.randint(2, 9), rng.randint(-20, 20)
        op = rng.choice(CPP_OPS)
        cmp = rng.choice(CMP)
        out.append(f"int fold_{k}(const int* a, int n) {{\n  int s = {c1};\n  for (int i = 0; i < n; ++i) s = s {op} a[i];\n  return s;\n}}")
        out.append(f"int clamp_{k}(int x) {{\n  if (x < {c3}) return {c3};\n  if (x > {c3 + c1}) return {c3 + c1};\n  return x;\n}}")
        cases = "".join(f"    case {i}: return x {rng.choice(CPP_OPS)} {rng.randint(1, 50)};\n" for i in range(rng.randint(3, 6)))
        out.append(f"int pick_{k}(int sel, int x) {{\n  switch (sel) {{\n{cases}    default: return {c3};\n  }}\n}}")
        out.append(f"int steps_{k}(unsigned x) {{\n  int n = 0;\n  while (x > 1 && n < {c1 * 10}) {{\n    x = (x % 2) ? {c2} * x + 1 : x / 2;\n    ++n;\n  }}\n  return n;\n}}")
        out.append(f"long rec_{k}(int n) {{\n  if (n <= {c2 % 3}) return {c1};\n  return rec_{k}(n - 1) {rng.choice(['+', '*', '-'])} n;\n}}")
        out.append(f"int count_{k}(const int* a, int n, int t) {{\n  int c = 0;\n  for (int i = 0; i < n; ++i)\n    if (a[i] {cmp} t + {c2}) ++c;\n  return c;\n}}")
        out.append(f"int find_{k}(const int* a, int n, int v) {{\n  for (int i = {c2 % 2}; i < n; ++i) {{\n    if (a[i] == v) return i;\n  }}\n  return -{c2};\n}}")
        out.append(f"int grid_{k}(int rows, int cols) {{\n  int t = 0;\n  for (int r = 0; r < rows; ++r)\n    for (int c = 0; c < cols; ++c) t += (r {op} c) % {c2};\n  return t;\n}}")
        out.append(f"double poly_{k}(double x) {{\n  return {c1}.5 * x * x {rng.choice(['+', '-'])} {c2}.25 * x + {c3}.0;\n}}")
        out.append(f"namespace geo_{k} {{\nint area(int w, int h) {{\n  if (w <= 0 || h <= 0) return 0;\n  return w * h + {c1};\n}}\n}}")
        out.append(f"bool check_{k}(short a, short b) {{\n  return (a {cmp} b) != ((a {op} b) > {c3});\n}}")
        out.append(f"void scale_{k}(int* a, int n) {{\n  for (int i = 0; i < n; ++i) {{\n    if (a[i] {cmp} {c3}) a[i] *= {c2};\n    else a[i] -= {c1};\n  }}\n}}")
    return out


def rust_functions(rng, per_family):
    ops = ["+", "-", "*", "^", "|", "&"]
    out = []
    for k in range(per_family):
        c1, c2, c3 = rng.randint(1, 40), rng.randint(2, 9), rng.randint(-20, 20)
        op = rng.choice(ops)
        cmp = rng.choice(CMP)
        wrap = {"+": "wrapping_add", "-": "wrapping_sub", "*": "wrapping_mul"}
        step = f"s.{wrap[op]}(v)" if op in wrap else f"s {op} v"
        out.append(f"fn rfold_{k}(a: &[i32]) -> i32 {{\n    let mut s: i32 = {c1};\n    for &v in a {{\n        s = {step};\n    }}\n    s\n}}")
        out.append(f"fn rclamp_{k}(x: i32) -> i32 {{\n    if x < {c3} {{\n        {c3}\n    }} else if x > {c3 + c1} {{\n        {c3 + c1}\n    }} else {{\n        x\n    }}\n}}")
        arms = "".join(f"        {i} => x.wrapping_add({rng.randint(1, 50)}),\n" for i in range(rng.randint(3, 6)))
        out.append(f"fn rpick_{k}(sel: u32, x: i32) -> i32 {{\n    match sel {{\n{arms}        _ => {c3},\n    }}\n}}")
        out.append(f"fn rsteps_{k}(mut x: u64) -> u32 {{\n    let mut n = 0;\n    while x > 1 && n < {c1 * 10} {{\n        x = if x % 2 == 1 {{ x.wrapping_mul({c2}).wrapping_add(1) }} else {{ x / 2 }};\n        n += 1;\n    }}\n    n\n}}")
        out.append(f"fn rcount_{k}(a: &[i32], t: i32) -> usize {{\n    a.iter().filter(|&&v| v {cmp} t.wrapping_add({c2})).count()\n}}")
        out.append(f"fn rfind_{k}(a: &[i32], v: i32) -> i64 {{\n    for i in 0..a.len() {{\n        if a[i] == v {{\n            return i as i64;\n        }}\n    }}\n    -{c2}\n}}")
        out.append(f"fn rgrid_{k}(rows: i32, cols: i32) -> i32 {{\n    let mut t = 0i32;\n    for r in 0..rows {{\n        for c in 0..cols {{\n            t = t.wrapping_add((r {op} c) % {c2});\n        }}\n    }}\n    t\n}}")
        out.append(f"fn rpoly_{k}(x: f64) -> f64 {{\n    {c1}.5 * x * x {rng.choice(['+', '-'])} {c2}.25 * x + {c3}.0\n}}")
        out.append(f"fn rgcd_{k}(mut a: u32, mut b: u32) -> u32 {{\n    while b != 0 {{\n        let t = a % b;\n        a = b;\n        b = t;\n    }}\n    a + {c1}\n}}")
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="data/irfix/src")
    ap.add_argument("--seed", type=int, default=11)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    cpp = cpp_functions(rng, 11)
    rust = rust_functions(rng, 11)
    (out / "fixtures.cpp").write_text("\n\n".join(cpp) + "\n")
    (out / "fixtures.rs").write_text("\n\n".join(rust) + "\n")
    print(f"{len(cpp)} C++ and {len(rust)} Rust functions written to {out}")


if __name__ == "__main__":
    main()
