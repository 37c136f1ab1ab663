#!/usr/bin/env python3
"""Freezes BLEU reference values computed by sacrebleu (no smoothing).

Each output line: candidate ids, reference ids, score, separated by '|'.
Token sequences are drawn from a small alphabet so that n-gram overlap is
common, with a few length mismatches to exercise the brevity penalty.
"""
import random
import sys

import sacrebleu


def main():
    rng = random.Random(int(sys.argv[1]) if len(sys.argv) > 1 else 11)
    bleu = sacrebleu.metrics.BLEU(tokenize="none", smooth_method="none", effective_order=False)
    for case in range(24):
        n = rng.randint(6, 30)
        ref = [rng.randint(16, 24) for _ in range(n)]
        cand = list(ref)
        edits = rng.randint(0, n // 3)
        for _ in range(edits):
            op = rng.choice(["sub", "del", "ins"])
            i = rng.randrange(len(cand))
            if op == "sub":
                cand[i] = rng.randint(16, 24)
            elif op == "del" and len(cand) > 4:
                del cand[i]
            else:
                cand.insert(i, rng.randint(16, 24))
        if case % 6 == 5:
            cand = cand[: max(4, len(cand) // 2)]
        score = bleu.sentence_score(" ".join(map(str, cand)), [" ".join(map(str, ref))]).score
        print(f"{' '.join(map(str, cand))}|{' '.join(map(str, ref))}|{score:.12f}")


if __name__ == "__main__":
    main()
