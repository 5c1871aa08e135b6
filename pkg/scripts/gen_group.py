"""One-off deterministic generator for the committed 2048-bit Schnorr group.

Derives all candidates from a fixed seed string via SHA-256 counters, so the
committed constants are reproducible: python scripts/gen_group.py
"""
import hashlib

import gmpy2

SEED = b"blindfare group v1: 2048-bit p, 256-bit q"


def stream(label: str, nbits: int, counter: int) -> int:
    out = b""
    i = 0
    while len(out) * 8 < nbits:
        out += hashlib.sha256(SEED + label.encode() + counter.to_bytes(8, "big") + i.to_bytes(4, "big")).digest()
        i += 1
    v = int.from_bytes(out, "big") >> (len(out) * 8 - nbits)
    return v | (1 << (nbits - 1)) | 1  # force top bit and odd


def find_q() -> int:
    c = 0
    while True:
        q = stream("q", 256, c)
        if gmpy2.is_prime(q, 64):
            return q
        c += 1


def find_p(q: int) -> int:
    c = 0
    while True:
        k = stream("k", 2048 - 256, c) & ~1  # even cofactor so p = k*q + 1 is odd
        p = k * q + 1
        if p.bit_length() == 2048 and gmpy2.is_prime(p, 64):
            return int(p)
        c += 1


def find_g(p: int, q: int) -> int:
    c = 0
    while True:
        h = stream("g", 2048, c) % p
        g = int(gmpy2.powmod(h, (p - 1) // q, p))
        if g not in (0, 1):
            return g
        c += 1


def main() -> None:
    q = find_q()
    p = find_p(q)
    g = find_g(p, q)
    assert gmpy2.is_prime(p, 64) and gmpy2.is_prime(q, 64)
    assert (p - 1) % q == 0
    assert gmpy2.powmod(g, q, p) == 1 and g != 1
    print(f"P_2048 = {hex(p)}")
    print(f"Q_2048 = {hex(q)}")
    print(f"G_2048 = {hex(g)}")


if __name__ == "__main__":
    main()
