#!/usr/bin/env python3
"""Generates the bundled demo corpus at data/demo.tsv.

A synthetic two-class review corpus: each sentence mixes strongly
class-marked words, weakly class-skewed words, shared filler vocabulary,
and space-separated punctuation, so a bag-of-words classifier lands well
above chance but below perfect. 3000 examples, balanced labels.

Run from the repository root:

    python3 scripts/make_demo_corpus.py
"""

import random

SEED = 20240801
N_EXAMPLES = 3000
OUT = "data/demo.tsv"

STRONG_POS = [
    "charming", "delightful", "captivating", "heartfelt", "wonderful",
    "excellent", "superb", "radiant", "luminous", "tender", "gripping",
    "inventive", "vibrant", "graceful", "rousing", "masterful", "exquisite",
    "soaring", "witty", "irresistible", "stirring", "dazzling", "rewarding",
    "absorbing", "sublime",
]
STRONG_NEG = [
    "dreary", "tedious", "clumsy", "lifeless", "hollow", "grating",
    "bloated", "incoherent", "stale", "plodding", "dismal", "shallow",
    "sloppy", "laborious", "monotonous", "contrived", "joyless", "leaden",
    "muddled", "insufferable", "vapid", "charmless", "aimless", "turgid",
    "forgettable",
]
WEAK_POS = [
    "good", "funny", "smart", "warm", "fresh", "lively", "crisp",
    "engaging", "sweet", "sincere",
]
WEAK_NEG = [
    "bad", "dull", "boring", "flat", "slow", "messy", "thin", "tired",
    "awkward", "bland",
]
FILLER = [
    "the", "a", "an", "this", "that", "its", "with", "and", "but", "of",
    "in", "on", "for", "film", "movie", "story", "plot", "script",
    "acting", "cast", "director", "scenes", "pacing", "dialogue",
    "characters", "ending", "moments", "performances", "camera", "tone",
    "style", "humor", "drama", "picture", "feature", "work", "piece",
    "effort", "tale", "journey", "portrait", "study", "look", "take",
    "ride", "experience", "affair", "outing", "debut", "sequel", "comedy",
    "thriller", "romance", "documentary",
]


def make_sentence(rng, positive):
    own_strong = STRONG_POS if positive else STRONG_NEG
    opp_strong = STRONG_NEG if positive else STRONG_POS
    own_weak = WEAK_POS if positive else WEAK_NEG
    opp_weak = WEAK_NEG if positive else WEAK_POS

    words = []
    for _ in range(rng.choice([0, 1, 1, 2])):
        pool = opp_strong if rng.random() < 0.15 else own_strong
        words.append(rng.choice(pool))
    for _ in range(rng.randint(1, 3)):
        pool = own_weak if rng.random() < 0.65 else opp_weak
        words.append(rng.choice(pool))
    for _ in range(rng.randint(3, 14)):
        words.append(rng.choice(FILLER))
    rng.shuffle(words)

    if rng.random() < 0.35 and len(words) > 2:
        words.insert(rng.randint(1, len(words) - 1), ",")
    if rng.random() < 0.6:
        words.append(".")
    return " ".join(words)


def main():
    rng = random.Random(SEED)
    with open(OUT, "w", encoding="utf-8", newline="\n") as fh:
        for i in range(N_EXAMPLES):
            positive = i % 2 == 0
            label = "1" if positive else "0"
            fh.write(f"{label}\t{make_sentence(rng, positive)}\n")
    print(f"wrote {N_EXAMPLES} examples to {OUT}")


if __name__ == "__main__":
    main()
