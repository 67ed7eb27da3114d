"""One-off: compute the d=8 census row and validate the class count."""
import os
import time

from posetfano import build_table

t0 = time.time()
rows = build_table(8, jobs=os.cpu_count() or 1, log=lambda m: print(m, flush=True))
for r in rows:
    print(f"d={r.d}: posets={r.posets} smooth={r.smooth}", flush=True)
print(f"total {time.time()-t0:.0f}s", flush=True)
