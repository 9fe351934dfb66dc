#!/usr/bin/env python3
"""How the decaying count-min sketch trades memory for accuracy.

Run:  python3 demos/02_sketch_accuracy.py
"""

from collections import defaultdict

import numpy as np

from reviewstream import CountMinSketch

rng = np.random.default_rng(0)

# A skewed stream: a handful of hot keys, a long tail of cold ones.
keys = [f"app{i:04d}" for i in range(2000)]
weights = 1.0 / np.arange(1, len(keys) + 1)
picks = rng.choice(len(keys), size=50_000, p=weights / weights.sum())

exact = defaultdict(float)
for width in (64, 512, 4096):
    sketch = CountMinSketch(rows=4, cols=width)
    exact.clear()
    for pick in picks:
        sketch.insert(keys[pick], 1.0)
        exact[keys[pick]] += 1.0
    errors = [sketch.estimate(k) - exact[k] for k in keys]
    overshoot = [e for e in errors if e > 0]
    print(f"width={width:5d}  memory={sketch.memory_bytes/1024:7.1f} KiB  "
          f"keys overestimated: {len(overshoot):4d}/{len(keys)}  "
          f"worst overshoot: {max(errors):8.1f}")
    # never below the truth, no matter how narrow the sketch
    assert min(errors) >= 0.0

# Decay scales every counter, which is how the detector ages history:
# a count of 100 looks like 60, 36, 21.6, ... on following days.
sketch = CountMinSketch(rows=2, cols=1024)
sketch.insert("hot-app", 100.0)
print("\ndecayed estimate of a count of 100 at decay=0.6:")
trail = []
for _ in range(5):
    trail.append(f"{sketch.estimate('hot-app'):6.1f}")
    sketch.decay(0.6)
print("  " + " -> ".join(trail))
