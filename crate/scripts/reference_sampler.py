#!/usr/bin/env python3
"""Straight-line reference implementation of the punctuation-insertion sampler.

This script is the independent oracle for the library's random behavior. It
regenerates every golden file under crates/textaug/tests/golden/ from first
principles: the SplitMix64 generator, the rejection-sampled bounded draw, the
seed-derivation chain, and the three augmentation draws (count, slots, marks)
are all written out long-hand here, with no shared code with the Rust crate.

Run from the repository root:

    python3 scripts/reference_sampler.py
"""

import os

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
MIX_A = 0xBF58476D1CE4E5B9
MIX_B = 0x94D049BB133111EB
DOMAIN = 0xA0761D6478BD642F

PUNCT = [".", ";", "?", ":", "!", ","]

GOLDEN_DIR = os.path.join("crates", "textaug", "tests", "golden")


def mix(z):
    """SplitMix64 finalizer."""
    z &= MASK
    z = ((z ^ (z >> 30)) * MIX_A) & MASK
    z = ((z ^ (z >> 27)) * MIX_B) & MASK
    return (z ^ (z >> 31)) & MASK


class Stream:
    """SplitMix64: state advances by GAMMA, output is the mixed state."""

    def __init__(self, seed):
        self.state = seed & MASK

    def next_u64(self):
        self.state = (self.state + GAMMA) & MASK
        return mix(self.state)

    def next_below(self, n):
        # Rejection sampling: discard the low `2^64 mod n` values so that
        # v % n is exactly uniform. Always consumes at least one draw.
        assert n >= 1
        reject_below = (1 << 64) % n
        while True:
            v = self.next_u64()
            if v >= reject_below:
                return v % n


def derive_seed(master, tags):
    """Child-stream seed: fold each tag through the finalizer."""
    acc = mix(master ^ DOMAIN)
    for t in tags:
        acc = mix(acc ^ (t & MASK))
    return acc


def insertion_count(length, num, den, rng):
    """Uniform over {1, ..., max(1, floor(length*num/den))}."""
    assert length >= 1
    hi = max(1, (length * num) // den)
    return 1 + rng.next_below(hi)


def aeda_augment(tokens, rng, num=1, den=3, punct=PUNCT):
    """The three draws: count, then slots (partial Fisher-Yates, sorted),
    then one mark per slot in ascending slot order."""
    length = len(tokens)
    n = insertion_count(length, num, den, rng)
    idx = list(range(length))
    for k in range(n):
        j = k + rng.next_below(length - k)
        idx[k], idx[j] = idx[j], idx[k]
    slots = sorted(idx[:n])
    marks = [punct[rng.next_below(len(punct))] for _ in slots]
    out = []
    pos = 0
    for i, tok in enumerate(tokens):
        if pos < len(slots) and slots[pos] == i:
            out.append(marks[pos])
            pos += 1
        out.append(tok)
    return out


def augment_batch(examples, num_aug, master):
    """Original followed by its copies; copy (i, j) uses a derived stream."""
    out = []
    for i, (label, text) in enumerate(examples):
        out.append((label, text))
        tokens = text.split()
        for j in range(num_aug):
            rng = Stream(derive_seed(master, [i, j]))
            out.append((label, " ".join(aeda_augment(tokens, rng))))
    return out


def read_tsv(path):
    examples = []
    with open(path, encoding="utf-8") as fh:
        for line in fh.read().split("\n"):
            if not line:
                continue
            label, text = line.split("\t")
            examples.append((label, text))
    return examples


def write_tsv(examples, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for label, text in examples:
            fh.write(f"{label}\t{text}\n")


def write_rng_reference(path):
    """Frozen generator values consumed by the crate's unit tests."""
    rows = []
    for seed in (0, 1, 42):
        s = Stream(seed)
        for draw in range(3):
            rows.append((f"next_u64 seed={seed} draw={draw}", s.next_u64()))
    s = Stream(7)
    for draw in range(4):
        rows.append((f"next_below10 seed=7 draw={draw}", s.next_below(10)))
    for (i, j) in ((0, 0), (0, 1), (1, 0), (5, 3)):
        rows.append((f"derive master=7 i={i} j={j}", derive_seed(7, [i, j])))
    rows.append(("derive master=0 i=0 j=0", derive_seed(0, [0, 0])))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for name, value in rows:
            fh.write(f"{name}\t{value}\n")


def main():
    single = " ".join(aeda_augment("the cat sat on the mat".split(), Stream(42)))
    with open(os.path.join(GOLDEN_DIR, "aeda_single_seed42.txt"), "w",
              encoding="utf-8", newline="\n") as fh:
        fh.write(single + "\n")
    print(f"single seed=42: {single}")

    examples = read_tsv(os.path.join(GOLDEN_DIR, "input.tsv"))
    for seed in (0, 1, 42):
        out = augment_batch(examples, num_aug=3, master=seed)
        path = os.path.join(GOLDEN_DIR, f"aeda_seed{seed}_numaug3.tsv")
        write_tsv(out, path)
        print(f"wrote {path} ({len(out)} lines)")

    write_rng_reference(os.path.join(GOLDEN_DIR, "rng_reference.tsv"))
    print("wrote rng_reference.tsv")


if __name__ == "__main__":
    main()
