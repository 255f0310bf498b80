#!/usr/bin/env python3
"""Reference implementation of the kext random-corpus contract.

usage: random_contract.py N COUNT SEED

Prints the same graph6 lines as `kext gen --random N COUNT SEED`, using a
from-scratch MT19937-64 so the contract can be checked without the C++
standard library.
"""
import sys

MASK = (1 << 64) - 1


class MT19937_64:
    n, m = 312, 156
    upper, lower = 0xFFFFFFFF80000000, 0x7FFFFFFF

    def __init__(self, seed):
        self.mt = [seed & MASK]
        for i in range(1, self.n):
            prev = self.mt[-1]
            self.mt.append((6364136223846793005 * (prev ^ (prev >> 62)) + i) & MASK)
        self.index = self.n

    def _twist(self):
        for i in range(self.n):
            x = (self.mt[i] & self.upper) | (self.mt[(i + 1) % self.n] & self.lower)
            xa = x >> 1
            if x & 1:
                xa ^= 0xB5026F5AA96619E9
            self.mt[i] = self.mt[(i + self.m) % self.n] ^ xa
        self.index = 0

    def next(self):
        if self.index >= self.n:
            self._twist()
        y = self.mt[self.index]
        self.index += 1
        y ^= (y >> 29) & 0x5555555555555555
        y ^= (y << 17) & 0x71D67FFFEDA60000
        y ^= (y << 37) & 0xFFF7EEE000000000
        y ^= y >> 43
        return y & MASK


def graph6(n, bits):
    out = [chr(63 + n)]
    bits = bits + [0] * (-len(bits) % 6)
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i:i + 6]:
            group = (group << 1) | b
        out.append(chr(63 + group))
    return "".join(out)


def main(argv):
    n, count, seed = (int(a) for a in argv[1:4])
    rng = MT19937_64(seed)
    for _ in range(count):
        bits = []
        for j in range(1, n):
            for _i in range(j):
                bits.append(1 if (rng.next() >> 11) * 2.0**-53 < 0.5 else 0)
        print(graph6(n, bits))


if __name__ == "__main__":
    main(sys.argv)
