"""
A deque built from two tiered arrays
====================================

Pushes and pops at both ends, with indexed access in between.  When one
side runs dry, half of the items are moved across.
"""

import random
from collections import deque

from resarray import TieredDeque

d, shadow = TieredDeque(3), deque()
rng = random.Random(3)
for step in range(50_000):
    if shadow and rng.random() < 0.45:
        if rng.random() < 0.5:
            assert d.pop_front() == shadow.popleft()
        else:
            assert d.pop_back() == shadow.pop()
    elif rng.random() < 0.5:
        d.push_front(step)
        shadow.appendleft(step)
    else:
        d.push_back(step)
        shadow.append(step)

assert d.to_list() == list(shadow)
print(f"N={len(d)} front={len(d.front)} back={len(d.back)} rebalances={d.rebalances}")
print(f"live words {d.mem.live_words}, overhead {d.mem.live_words - len(d)}")
