#!/usr/bin/env python3
"""Generates the desk evaluation set.

Layout: <out>/problems/<id>/<lang>.src holds the reference function and
<lang>.test the test program with a literal {{CANDIDATE}} marker. Expected
values come from the Python definitions below, so a reference that disagrees
with its Python twin fails its own tests at load time.

<out>/mutations.tsv lists one single-token semantic mutation per problem and
language: problem, language, original token, replacement, occurrence index.
Occurrences are counted from the function's opening brace, so the signature
is never touched.
"""
import argparse
import pathlib
import shutil


def trunc_div(a, b):
    q = abs(a) // abs(b)
    return q if (a >= 0) == (b >= 0) else -q


def trunc_mod(a, b):
    return a - b * trunc_div(a, b)


def _gcd(a, b):
    while b != 0:
        a, b = b, trunc_mod(a, b)
    return a


def _is_prime(n):
    if n < 2:
        return 0
    i = 2
    while i * i <= n:
        if n % i == 0:
            return 0
        i += 1
    return 1


def _popcount(x):
    c = 0
    while x != 0:
        c += x & 1
        x >>= 1
    return c


def _collatz(n):
    steps = 0
    while n != 1:
        n = n // 2 if n % 2 == 0 else 3 * n + 1
        steps += 1
    return steps


def _isqrt(n):
    r = 0
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


def _fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _binom(n, k):
    r = 1
    for i in range(1, k + 1):
        r = r * (n - k + i) // i
    return r


# (id, params, python, cpp body, rust body, inputs, mutation (token, replacement, occurrence))
PROBLEMS = [
    ("add_two", "ab", lambda a, b: a + b,
     "return a + b;", "a + b",
     [(1, 2), (-5, 3), (100, 250), (0, 0)], ("+", "-", 0)),
    ("sub_two", "ab", lambda a, b: a - b,
     "return a - b;", "a - b",
     [(1, 2), (-5, 3), (100, 25), (7, 7)], ("-", "+", 0)),
    ("max_of_two", "ab", max,
     "return a > b ? a : b;", "if a > b { a } else { b }",
     [(1, 2), (5, 3), (-1, -7), (4, 4)], (">", "<", 0)),
    ("min_of_two", "ab", min,
     "return a < b ? a : b;", "if a < b { a } else { b }",
     [(1, 2), (5, 3), (-1, -7), (4, 4)], ("<", ">", 0)),
    ("abs_value", "x", abs,
     "return x < 0 ? -x : x;", "if x < 0 { -x } else { x }",
     [(3,), (-3,), (0,), (-120,)], ("<", ">", 0)),
    ("clamp_percent", "x", lambda x: max(0, min(100, x)),
     "if (x < 0) return 0;\n  if (x > 100) return 100;\n  return x;",
     "if x < 0 {\n        return 0;\n    }\n    if x > 100 {\n        return 100;\n    }\n    x",
     [(-5,), (0,), (50,), (100,), (150,)], ("100", "99", 1)),
    ("sign_of", "x", lambda x: (x > 0) - (x < 0),
     "if (x > 0) return 1;\n  if (x < 0) return -1;\n  return 0;",
     "if x > 0 {\n        return 1;\n    }\n    if x < 0 {\n        return -1;\n    }\n    0",
     [(9,), (-4,), (0,)], ("-1", "1", 0)),
    ("is_even", "x", lambda x: 1 if x % 2 == 0 else 0,
     "return x % 2 == 0 ? 1 : 0;", "if x % 2 == 0 { 1 } else { 0 }",
     [(4,), (7,), (0,), (-3,)], ("==", "!=", 0)),
    ("square", "x", lambda x: x * x,
     "return x * x;", "x * x",
     [(3,), (-4,), (0,), (12,)], ("*", "+", 0)),
    ("cube", "x", lambda x: x * x * x,
     "return x * x * x;", "x * x * x",
     [(3,), (-2,), (0,), (5,)], ("*", "+", 1)),
    ("sum_to_n", "n", lambda n: n * (n + 1) // 2,
     "int s = 0;\n  for (int i = 1; i <= n; ++i) s += i;\n  return s;",
     "let mut s = 0;\n    for i in 1..=n {\n        s += i;\n    }\n    s",
     [(0,), (1,), (10,), (100,)], ("1", "2", 0)),
    ("factorial", "n", lambda n: 1 if n <= 1 else __import__("math").factorial(n),
     "int r = 1;\n  for (int i = 2; i <= n; ++i) r *= i;\n  return r;",
     "let mut r = 1;\n    for i in 2..=n {\n        r *= i;\n    }\n    r",
     [(0,), (1,), (5,), (10,)], ("2", "3", 0)),
    ("fibonacci", "n", _fib,
     "int a = 0, b = 1;\n  for (int i = 0; i < n; ++i) {\n    int t = a + b;\n    a = b;\n    b = t;\n  }\n  return a;",
     "let mut a = 0;\n    let mut b = 1;\n    for _ in 0..n {\n        let t = a + b;\n        a = b;\n        b = t;\n    }\n    a",
     [(0,), (1,), (2,), (10,), (30,)], ("0", "1", 0)),
    ("gcd", "ab", _gcd,
     "while (b != 0) {\n    int t = a % b;\n    a = b;\n    b = t;\n  }\n  return a;",
     "let mut a = a;\n    let mut b = b;\n    while b != 0 {\n        let t = a % b;\n        a = b;\n        b = t;\n    }\n    a",
     [(12, 18), (17, 5), (100, 75), (7, 0)], ("%", "/", 0)),
    ("lcm", "ab", lambda a, b: a // _gcd(a, b) * b,
     "int x = a, y = b;\n  while (y != 0) {\n    int t = x % y;\n    x = y;\n    y = t;\n  }\n  return a / x * b;",
     "let mut x = a;\n    let mut y = b;\n    while y != 0 {\n        let t = x % y;\n        x = y;\n        y = t;\n    }\n    a / x * b",
     [(4, 6), (3, 5), (12, 18), (7, 7)], ("*", "+", 0)),
    ("power", "ab", lambda a, b: a ** b,
     "int r = 1;\n  for (int i = 0; i < b; ++i) r *= a;\n  return r;",
     "let mut r = 1;\n    for _ in 0..b {\n        r *= a;\n    }\n    r",
     [(2, 10), (3, 4), (5, 0), (-2, 3)], ("1", "0", 0)),
    ("count_digits", "x", lambda x: len(str(abs(x))),
     "if (x < 0) x = -x;\n  int c = 1;\n  while (x >= 10) {\n    x /= 10;\n    ++c;\n  }\n  return c;",
     "let mut x = if x < 0 { -x } else { x };\n    let mut c = 1;\n    while x >= 10 {\n        x /= 10;\n        c += 1;\n    }\n    c",
     [(0,), (9,), (10,), (12345,), (-407,)], (">=", ">", 0)),
    ("reverse_digits", "x", lambda x: int(str(x)[::-1]),
     "int r = 0;\n  while (x > 0) {\n    r = r * 10 + x % 10;\n    x /= 10;\n  }\n  return r;",
     "let mut x = x;\n    let mut r = 0;\n    while x > 0 {\n        r = r * 10 + x % 10;\n        x /= 10;\n    }\n    r",
     [(123,), (1200,), (7,), (90817,)], ("+", "-", 0)),
    ("digit_sum", "x", lambda x: sum(map(int, str(x))),
     "int s = 0;\n  while (x > 0) {\n    s += x % 10;\n    x /= 10;\n  }\n  return s;",
     "let mut x = x;\n    let mut s = 0;\n    while x > 0 {\n        s += x % 10;\n        x /= 10;\n    }\n    s",
     [(0,), (123,), (9999,), (505,)], ("%", "/", 0)),
    ("is_prime", "n", _is_prime,
     "if (n < 2) return 0;\n  for (int i = 2; i * i <= n; ++i) {\n    if (n % i == 0) return 0;\n  }\n  return 1;",
     "if n < 2 {\n        return 0;\n    }\n    let mut i = 2;\n    while i * i <= n {\n        if n % i == 0 {\n            return 0;\n        }\n        i += 1;\n    }\n    1",
     [(1,), (2,), (9,), (13,), (97,), (100,)], ("<=", "<", 0)),
    ("popcount", "x", _popcount,
     "int c = 0;\n  while (x != 0) {\n    c += x & 1;\n    x >>= 1;\n  }\n  return c;",
     "let mut x = x;\n    let mut c = 0;\n    while x != 0 {\n        c += x & 1;\n        x >>= 1;\n    }\n    c",
     [(0,), (1,), (7,), (255,), (1024,)], ("&", "|", 0)),
    ("count_divisors", "n", lambda n: sum(1 for d in range(1, n + 1) if n % d == 0),
     "int c = 0;\n  for (int d = 1; d <= n; ++d) {\n    if (n % d == 0) ++c;\n  }\n  return c;",
     "let mut c = 0;\n    for d in 1..=n {\n        if n % d == 0 {\n            c += 1;\n        }\n    }\n    c",
     [(1,), (12,), (13,), (36,)], ("==", "!=", 0)),
    ("sum_of_squares", "n", lambda n: sum(i * i for i in range(1, n + 1)),
     "int s = 0;\n  for (int i = 1; i <= n; ++i) s += i * i;\n  return s;",
     "let mut s = 0;\n    for i in 1..=n {\n        s += i * i;\n    }\n    s",
     [(0,), (1,), (3,), (10,)], ("*", "+", 0)),
    ("average_of_two", "ab", lambda a, b: trunc_div(a + b, 2),
     "return (a + b) / 2;", "(a + b) / 2",
     [(2, 4), (3, 4), (10, 30), (-6, 2)], ("/", "*", 0)),
    ("max_of_three", "abc", lambda a, b, c: max(a, b, c),
     "int m = a;\n  if (b > m) m = b;\n  if (c > m) m = c;\n  return m;",
     "let mut m = a;\n    if b > m {\n        m = b;\n    }\n    if c > m {\n        m = c;\n    }\n    m",
     [(1, 2, 3), (3, 2, 1), (2, 3, 1), (-1, -2, -3)], (">", "<", 1)),
    ("median_of_three", "abc", lambda a, b, c: sorted([a, b, c])[1],
     "if ((a >= b && a <= c) || (a <= b && a >= c)) return a;\n  if ((b >= a && b <= c) || (b <= a && b >= c)) return b;\n  return c;",
     "if (a >= b && a <= c) || (a <= b && a >= c) {\n        return a;\n    }\n    if (b >= a && b <= c) || (b <= a && b >= c) {\n        return b;\n    }\n    c",
     [(1, 2, 3), (3, 1, 2), (2, 3, 1), (5, 5, 1), (9, 4, 7)], ("&&", "||", 0)),
    ("is_leap_year", "y", lambda y: 1 if (y % 4 == 0 and y % 100 != 0) or y % 400 == 0 else 0,
     "return ((y % 4 == 0 && y % 100 != 0) || y % 400 == 0) ? 1 : 0;",
     "if (y % 4 == 0 && y % 100 != 0) || y % 400 == 0 { 1 } else { 0 }",
     [(2000,), (1900,), (2024,), (2023,)], ("!=", "==", 0)),
    ("collatz_steps", "n", _collatz,
     "int steps = 0;\n  while (n != 1) {\n    n = n % 2 == 0 ? n / 2 : 3 * n + 1;\n    ++steps;\n  }\n  return steps;",
     "let mut n = n;\n    let mut steps = 0;\n    while n != 1 {\n        n = if n % 2 == 0 { n / 2 } else { 3 * n + 1 };\n        steps += 1;\n    }\n    steps",
     [(1,), (6,), (7,), (27,)], ("3", "5", 0)),
    ("integer_sqrt", "n", _isqrt,
     "int r = 0;\n  while ((r + 1) * (r + 1) <= n) ++r;\n  return r;",
     "let mut r = 0;\n    while (r + 1) * (r + 1) <= n {\n        r += 1;\n    }\n    r",
     [(0,), (1,), (15,), (16,), (1000,)], ("<=", "<", 0)),
    ("midpoint", "ab", lambda a, b: (a + b) >> 1,
     "return (a + b) >> 1;", "(a + b) >> 1",
     [(0, 10), (3, 8), (100, 200), (7, 7)], (">>", ">", 0)),
    ("distance", "ab", lambda a, b: abs(a - b),
     "return a > b ? a - b : b - a;", "if a > b { a - b } else { b - a }",
     [(3, 9), (9, 3), (-4, 4), (5, 5)], ("-", "+", 0)),
    ("is_power_of_two", "x", lambda x: 1 if x > 0 and (x & (x - 1)) == 0 else 0,
     "return (x > 0 && (x & (x - 1)) == 0) ? 1 : 0;",
     "if x > 0 && (x & (x - 1)) == 0 { 1 } else { 0 }",
     [(1,), (2,), (6,), (64,), (0,), (100,)], ("&", "|", 1)),
    ("trailing_zeros", "x", lambda x: (x & -x).bit_length() - 1,
     "int c = 0;\n  while ((x & 1) == 0) {\n    x >>= 1;\n    ++c;\n  }\n  return c;",
     "let mut x = x;\n    let mut c = 0;\n    while (x & 1) == 0 {\n        x >>= 1;\n        c += 1;\n    }\n    c",
     [(1,), (8,), (12,), (96,)], ("1", "2", 0)),
    ("sum_multiples_3_5", "n", lambda n: sum(i for i in range(n) if i % 3 == 0 or i % 5 == 0),
     "int s = 0;\n  for (int i = 0; i < n; ++i) {\n    if (i % 3 == 0 || i % 5 == 0) s += i;\n  }\n  return s;",
     "let mut s = 0;\n    for i in 0..n {\n        if i % 3 == 0 || i % 5 == 0 {\n            s += i;\n        }\n    }\n    s",
     [(10,), (16,), (1,), (100,)], ("||", "&&", 0)),
    ("triangular", "n", lambda n: n * (n + 1) // 2,
     "return n * (n + 1) / 2;", "n * (n + 1) / 2",
     [(0,), (1,), (4,), (100,)], ("+", "-", 0)),
    ("div_round_up", "ab", lambda a, b: (a + b - 1) // b,
     "return (a + b - 1) / b;", "(a + b - 1) / b",
     [(10, 3), (9, 3), (1, 5), (17, 4)], ("-", "+", 0)),
    ("binomial", "nk", _binom,
     "int r = 1;\n  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;\n  return r;",
     "let mut r = 1;\n    for i in 1..=k {\n        r = r * (n - k + i) / i;\n    }\n    r",
     [(5, 2), (6, 3), (10, 0), (10, 10), (12, 5)], ("+", "-", 0)),
    ("alternating_sum", "n", lambda n: sum(i if i % 2 == 1 else -i for i in range(1, n + 1)),
     "int s = 0;\n  for (int i = 1; i <= n; ++i) s += (i % 2 == 1) ? i : -i;\n  return s;",
     "let mut s = 0;\n    for i in 1..=n {\n        s += if i % 2 == 1 { i } else { -i };\n    }\n    s",
     [(1,), (2,), (5,), (10,)], ("==", "!=", 0)),
    ("hamming_distance", "ab", lambda a, b: _popcount(a ^ b),
     "int x = a ^ b;\n  int c = 0;\n  while (x != 0) {\n    c += x & 1;\n    x >>= 1;\n  }\n  return c;",
     "let mut x = a ^ b;\n    let mut c = 0;\n    while x != 0 {\n        c += x & 1;\n        x >>= 1;\n    }\n    c",
     [(1, 4), (7, 7), (0, 255), (10, 5)], ("^", "&", 0)),
    ("max_digit", "x", lambda x: max(map(int, str(x))),
     "int m = 0;\n  while (x > 0) {\n    int d = x % 10;\n    if (d > m) m = d;\n    x /= 10;\n  }\n  return m;",
     "let mut x = x;\n    let mut m = 0;\n    while x > 0 {\n        let d = x % 10;\n        if d > m {\n            m = d;\n        }\n        x /= 10;\n    }\n    m",
     [(0,), (123,), (909,), (4715,)], (">", "<", 1)),
    ("count_primes", "n", lambda n: sum(_is_prime(i) for i in range(n + 1)),
     "int c = 0;\n  for (int i = 2; i <= n; ++i) {\n    int p = 1;\n    for (int d = 2; d * d <= i; ++d) {\n      if (i % d == 0) {\n        p = 0;\n        break;\n      }\n    }\n    c += p;\n  }\n  return c;",
     "let mut c = 0;\n    for i in 2..=n {\n        let mut p = 1;\n        let mut d = 2;\n        while d * d <= i {\n            if i % d == 0 {\n                p = 0;\n                break;\n            }\n            d += 1;\n        }\n        c += p;\n    }\n    c",
     [(1,), (10,), (30,), (100,)], ("2", "3", 0)),
    ("is_perfect", "n", lambda n: 1 if n > 1 and sum(d for d in range(1, n) if n % d == 0) == n else 0,
     "int s = 0;\n  for (int d = 1; d < n; ++d) {\n    if (n % d == 0) s += d;\n  }\n  return (n > 1 && s == n) ? 1 : 0;",
     "let mut s = 0;\n    for d in 1..n {\n        if n % d == 0 {\n            s += d;\n        }\n    }\n    if n > 1 && s == n { 1 } else { 0 }",
     [(6,), (28,), (12,), (1,), (496,)], ("==", "!=", 0)),
    ("modular_power", "abm", lambda a, b, m: pow(a, b, m),
     "int r = 1 % m;\n  int base = a % m;\n  while (b > 0) {\n    if (b & 1) r = r * base % m;\n    base = base * base % m;\n    b >>= 1;\n  }\n  return r;",
     "let mut r = 1 % m;\n    let mut base = a % m;\n    let mut b = b;\n    while b > 0 {\n        if b & 1 == 1 {\n            r = r * base % m;\n        }\n        base = base * base % m;\n        b >>= 1;\n    }\n    r",
     [(2, 10, 1000), (3, 5, 7), (5, 0, 13), (7, 3, 10)], ("*", "+", 1)),
]


def signature(lang, name, params):
    if lang == "cpp":
        return f"int {name}(" + ", ".join(f"int {p}" for p in params) + ")"
    return f"fn {name}(" + ", ".join(f"{p}: i32" for p in params) + ") -> i32"


def function(lang, name, params, body):
    if lang == "cpp":
        return f"{signature(lang, name, params)} {{\n  {body}\n}}\n"
    return f"{signature(lang, name, params)} {{\n    {body}\n}}\n"


def test_program(lang, name, cases):
    if lang == "cpp":
        checks = "".join(f"  if ({name}({', '.join(map(str, args))}) != {expected}) ++failures;\n"
                         for args, expected in cases)
        return ("#include <cstdint>\n#include <cstdlib>\n\n{{CANDIDATE}}\n\nint main() {\n  int failures = 0;\n"
                + checks + "  return failures == 0 ? 0 : 1;\n}\n")
    checks = "".join(f"    if {name}({', '.join(map(str, args))}) != {expected} {{\n        failures += 1;\n    }}\n"
                     for args, expected in cases)
    return ("{{CANDIDATE}}\n\nfn main() {\n    let mut failures = 0;\n" + checks
            + "    std::process::exit(if failures == 0 { 0 } else { 1 });\n}\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="data/evalset")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    if (out / "problems").exists():
        shutil.rmtree(out / "problems")
    mutations = ["problem\tlanguage\ttoken\treplacement\toccurrence"]
    for pid, params, py, cpp_body, rust_body, inputs, (tok, rep, occ) in PROBLEMS:
        cases = [(args_, py(*args_)) for args_ in inputs]
        d = out / "problems" / pid
        d.mkdir(parents=True, exist_ok=True)
        for lang, body in (("cpp", cpp_body), ("rust", rust_body)):
            src = function(lang, pid, list(params), body)
            if src[src.index("{"):].count(tok) <= occ:
                raise SystemExit(f"{pid}/{lang}: mutation token {tok!r} occurrence {occ} not found")
            (d / f"{lang}.src").write_text(src)
            (d / f"{lang}.test").write_text(test_program(lang, pid, cases))
            mutations.append(f"{pid}\t{lang}\t{tok}\t{rep}\t{occ}")
    (out / "mutations.tsv").write_text("\n".join(mutations) + "\n")
    print(f"{len(PROBLEMS)} problems written to {out}")


if __name__ == "__main__":
    main()
