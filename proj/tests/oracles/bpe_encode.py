"""Independent byte-pair encoder used to freeze golden token ids.

Reads a vocabulary file (magic line, byte table, merge list) and encodes text
by repeatedly applying the lowest-ranked merge inside whitespace-led chunks.
"""
import re
import sys

RESERVED = 16


def load(path):
    lines = open(path, encoding="utf-8").read().splitlines()
    assert lines[0] == "irtrans-vocab 1"
    fallback = True
    byte_list, merges = [], []
    for line in lines[1:]:
        parts = line.split()
        if parts[0] == "byte_fallback":
            fallback = parts[1] == "1"
        elif parts[0] == "byte":
            byte_list.append(int(parts[1], 16))
        elif parts[0] == "merge":
            merges.append((int(parts[1]), int(parts[2])))
    if fallback:
        byte_list = list(range(256))
    byte_ids = {b: RESERVED + i for i, b in enumerate(byte_list)}
    first = RESERVED + len(byte_list)
    ranks = {pair: (rank, first + rank) for rank, pair in enumerate(merges)}
    return byte_ids, ranks


def encode(text, byte_ids, ranks):
    out = []
    for chunk in re.findall(rb"\s*\S*", text.encode()):
        if not chunk:
            continue
        sym = [byte_ids[b] for b in chunk]
        while True:
            cands = [(ranks[(a, b)], i) for i, (a, b) in enumerate(zip(sym, sym[1:])) if (a, b) in ranks]
            if not cands:
                break
            (rank, new), _ = min(cands)
            pair = next(p for p, r in ranks.items() if r[0] == rank)
            merged, i = [], 0
            while i < len(sym):
                if i + 1 < len(sym) and (sym[i], sym[i + 1]) == pair:
                    merged.append(new)
                    i += 2
                else:
                    merged.append(sym[i])
                    i += 1
            sym = merged
        out.extend(sym)
    return [1] + out + [2]


if __name__ == "__main__":
    byte_ids, ranks = load(sys.argv[1])
    print(" ".join(map(str, encode(sys.argv[2], byte_ids, ranks))))
