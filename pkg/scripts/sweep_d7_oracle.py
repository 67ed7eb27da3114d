"""One-off validation: classifier vs exact geometry for every d=7 class."""
import sys
import time

from posetfano import poset_classes
from posetfano.crosscheck import find_disagreement

reps = poset_classes(7)
t0 = time.time()
bad = 0
for k, p in enumerate(reps, 1):
    mm = find_disagreement(p)
    if mm:
        bad += 1
        print(f"DISAGREE {p!r}: {mm}", flush=True)
    if k % 100 == 0:
        print(f"checked {k}/{len(reps)}  ({time.time()-t0:.0f}s)", flush=True)
print(f"done: {len(reps)} classes, {bad} disagreements, {time.time()-t0:.0f}s", flush=True)
sys.exit(1 if bad else 0)
