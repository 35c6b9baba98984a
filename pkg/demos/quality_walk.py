#!/usr/bin/env python3
"""
How a point of interest drifts in quality, and how differently two
vehicles can perceive the very same visit.

Runs one quality random walk for a fortnight of simulated hours and
samples a handful of subjective experiences along the way.
"""
import numpy as np

from vsnsim import QualityProcess, experience_of

HOURS = 336
SEED = 7

rng = np.random.default_rng(SEED)
process = QualityProcess()

q = process.initial(rng)
print(f"opening quality: {q:.3f}")
print()
print(" hour  quality  visitor A feels  visitor B feels")

for hour in range(1, HOURS + 1):
    q = process.step(q, rng)
    if hour % 24 == 0:
        # two arrivals in the same hour rate the place independently
        a = experience_of(q, rng)
        b = experience_of(q, rng)
        print(f" {hour:4d}   {q:.3f}          {a:.3f}            {b:.3f}")

print()
print("Perception stays within a quarter of the offered quality in either")
print("direction, so a mediocre hour can still feel fine to one visitor")
print("and disappointing to the other.")
