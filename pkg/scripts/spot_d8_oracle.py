"""Spot check: classifier vs exact geometry on sampled d=8 classes."""
import random
import time

from posetfano import poset_classes
from posetfano.crosscheck import find_disagreement

reps = poset_classes(8)
rng = random.Random(97)
sample = rng.sample(list(reps), 40)
sample.sort(key=lambda p: p.hat().n_edges)  # cheap ones first
t0 = time.time()
bad = 0
for k, p in enumerate(sample, 1):
    mm = find_disagreement(p)
    if mm:
        bad += 1
        print(f"DISAGREE {p!r}: {mm}", flush=True)
    print(f"{k}/40 edges={p.hat().n_edges} ({time.time()-t0:.0f}s)", flush=True)
print(f"done: {bad} disagreements in 40 sampled d=8 classes", flush=True)
