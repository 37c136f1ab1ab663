#!/usr/bin/env python3
"""Independent reimplementation of span masking, dropping and local shuffle.

Prints the corrupted id list for a seeded input so the C++ result can be
compared against it. mt19937_64 is written out here rather than imported.
"""
import math
import sys

MASK = 3
RESERVED = 16


class MT64:
    def __init__(self, seed):
        self.mt = [0] * 312
        self.mt[0] = seed & 0xFFFFFFFFFFFFFFFF
        for i in range(1, 312):
            prev = self.mt[i - 1]
            self.mt[i] = (6364136223846793005 * (prev ^ (prev >> 62)) + i) & 0xFFFFFFFFFFFFFFFF
        self.idx = 312

    def _twist(self):
        for i in range(312):
            x = (self.mt[i] & 0xFFFFFFFF80000000) | (self.mt[(i + 1) % 312] & 0x7FFFFFFF)
            xa = x >> 1
            if x & 1:
                xa ^= 0xB5026F5AA96619E9
            self.mt[i] = self.mt[(i + 156) % 312] ^ xa
        self.idx = 0

    def next(self):
        if self.idx >= 312:
            self._twist()
        y = self.mt[self.idx]
        self.idx += 1
        y ^= (y >> 29) & 0x5555555555555555
        y ^= (y << 17) & 0x71D67FFFEDA60000
        y ^= (y << 37) & 0xFFF7EEE000000000
        y ^= y >> 43
        return y & 0xFFFFFFFFFFFFFFFF

    def uniform01(self):
        return (self.next() >> 11) * 2.0 ** -53

    def index(self, n):
        return int(self.uniform01() * n) % n

    def poisson(self, lam):
        limit = math.exp(-lam)
        p, k = 1.0, 0
        while True:
            k += 1
            p *= self.uniform01()
            if not p > limit:
                return k - 1


def corrupt_run(run, rng, rate, lam, drop, window):
    n = len(run)
    if n == 0:
        return run
    target = int(math.floor(rate * n + 0.5))
    if target > 0:
        masked = [False] * n
        covered, it = 0, 0
        while covered < target and it < 50 * n + 100:
            length = min(max(1, rng.poisson(lam)), target - covered)
            start = rng.index(n - length + 1)
            for i in range(start, start + length):
                if not masked[i]:
                    masked[i] = True
                    covered += 1
            it += 1
        run = [MASK if m else t for t, m in zip(run, masked)]
    if drop > 0:
        kept = [t for t in run if rng.uniform01() >= drop]
        run = kept if kept else [run[0]]
    if window > 0 and len(run) > 1:
        keys = [i + rng.uniform01() * (window + 1) for i in range(len(run))]
        order = sorted(range(len(run)), key=lambda i: (keys[i], i))
        run = [run[i] for i in order]
    return run


def corrupt(ids, rng, rate, lam, drop, window):
    out, i = [], 0
    while i < len(ids):
        if ids[i] < RESERVED:
            out.append(ids[i])
            i += 1
            continue
        j = i
        while j < len(ids) and ids[j] >= RESERVED:
            j += 1
        out += corrupt_run(ids[i:j], rng, rate, lam, drop, window)
        i = j
    return out


if __name__ == "__main__":
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 42
    ids = [1] + list(range(20, 60)) + [4] + list(range(100, 125)) + [2]
    print(",".join(map(str, corrupt(ids, MT64(seed), 0.2, 3.0, 0.1, 3))))
