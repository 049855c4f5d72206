"""
Space overhead of resizable arrays
==================================

Grow each implementation to the same length and compare the words it holds
beyond the items themselves, and the worst transient peak seen on the way.
"""

from resarray import BrodnikArray, GeometricArray, HatArray, Memory, TieredArray

N = 200_000

# every array allocates from its own word-accounted memory
makers = {
    "geometric a=1": lambda m: GeometricArray(m),
    "hat": lambda m: HatArray(m),
    "brodnik": lambda m: BrodnikArray(m),
    "tiered r=2": lambda m: TieredArray(2, m),
    "tiered r=3": lambda m: TieredArray(3, m),
    "tiered r=4": lambda m: TieredArray(4, m),
    "tiered r=4 chunked": lambda m: TieredArray(4, m, chunk="auto"),
}

print(f"{'impl':<20}{'live-N':>10}{'peak-N':>10}{'assign/N':>10}")
for name, make in makers.items():
    mem = Memory()
    a = make(mem)
    worst = 0
    for i in range(N):
        mem.reset_peak()
        a.grow(i)
        worst = max(worst, mem.peak_words - len(a))
    print(f"{name:<20}{mem.live_words - N:>10}{worst:>10}{mem.assignments / N:>10.2f}")

# More levels buy a smaller standing overhead (about r*B words with B ~ N^(1/r))
# and pay for it with more copying per grow.
