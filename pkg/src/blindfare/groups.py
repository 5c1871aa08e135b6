"""Prime-order subgroup arithmetic, hashing, and key generation.

All protocol crypto runs in an order-q subgroup of Z_p* (a Schnorr group).
Scalars are plain ints in [0, q); group elements are plain ints in [1, p)
satisfying v^q = 1 (mod p).  Heavy modular exponentiation is delegated to
gmpy2, which is an order of magnitude faster than CPython's pow for
2048-bit moduli.

Hashing policy: SHA-256 everywhere, with a mandatory domain tag, big-endian
integer interpretation.  This makes every derived value reproducible
bit-for-bit across implementations.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable

import gmpy2

# Miller-Rabin round count; error probability < 4^-64 < 2^-80.
_PRIME_ROUNDS = 64


def powmod(base: int, exp: int, mod: int) -> int:
    return int(gmpy2.powmod(base, exp, mod))


def is_probable_prime(n: int) -> bool:
    return n > 1 and bool(gmpy2.is_prime(n, _PRIME_ROUNDS))


class GroupError(ValueError):
    """Raised for malformed group parameters or non-subgroup elements."""


@dataclass(frozen=True)
class GroupParams:
    """A Schnorr group: prime p, prime q dividing p-1, and generators of
    the order-q subgroup.

    g is the main generator; h and g2 are independent generators whose
    discrete logs w.r.t. g are unknown by construction (derived via
    hash-to-group).  h backs Pedersen commitments, g2 is reserved for
    future schemes that need a third base.
    """

    p: int
    q: int
    g: int
    h: int
    g2: int

    @property
    def element_bytes(self) -> int:
        return (self.p.bit_length() + 7) // 8

    @property
    def scalar_bytes(self) -> int:
        return (self.q.bit_length() + 7) // 8

    def validate(self) -> None:
        if not is_probable_prime(self.p):
            raise GroupError("p is not prime")
        if not is_probable_prime(self.q):
            raise GroupError("q is not prime")
        if (self.p - 1) % self.q != 0:
            raise GroupError("q does not divide p-1")
        for name, gen in (("g", self.g), ("h", self.h), ("g2", self.g2)):
            if gen in (0, 1) or not 0 < gen < self.p:
                raise GroupError(f"generator {name} out of range")
            if powmod(gen, self.q, self.p) != 1:
                raise GroupError(f"generator {name} is not of order q")

    def is_element(self, v: int) -> bool:
        return 0 < v < self.p and powmod(v, self.q, self.p) == 1

    def check_element(self, v: int) -> int:
        if not self.is_element(v):
            raise GroupError(f"value is not in the order-{self.q} subgroup")
        return v

    def mul(self, *factors: int) -> int:
        acc = 1
        for f in factors:
            acc = acc * f % self.p
        return acc

    def exp(self, base: int, e: int) -> int:
        return powmod(base, e, self.p)

    def encode_scalar(self, s: int) -> bytes:
        if not 0 <= s < self.q:
            raise GroupError("scalar out of range")
        return s.to_bytes(self.scalar_bytes, "big")

    def decode_scalar(self, data: bytes) -> int:
        if len(data) != self.scalar_bytes:
            raise GroupError("bad scalar length")
        s = int.from_bytes(data, "big")
        if s >= self.q:
            raise GroupError("scalar out of range")
        return s

    def encode_element(self, v: int) -> bytes:
        if not 0 < v < self.p:
            raise GroupError("element out of range")
        return v.to_bytes(self.element_bytes, "big")

    def decode_element(self, data: bytes) -> int:
        if len(data) != self.element_bytes:
            raise GroupError("bad element length")
        v = int.from_bytes(data, "big")
        self.check_element(v)
        return v


@dataclass(frozen=True)
class KeyPair:
    """Private scalar x and public element y = g^x.

    The private half must never leave the owning actor; serializers in
    this package only accept the public element.
    """

    x: int
    y: int

    @classmethod
    def from_secret(cls, params: GroupParams, x: int) -> "KeyPair":
        if not 1 <= x < params.q:
            raise GroupError("private key out of range")
        return cls(x=x, y=params.exp(params.g, x))


def random_scalar(params: GroupParams, rng) -> int:
    """Uniform scalar in [0, q)."""
    return rng.randrange(params.q)


def random_nonzero_scalar(params: GroupParams, rng) -> int:
    """Uniform scalar in [1, q); resamples zero draws."""
    while True:
        s = rng.randrange(params.q)
        if s != 0:
            return s


def keygen(params: GroupParams, rng) -> KeyPair:
    x = random_nonzero_scalar(params, rng)
    pair = KeyPair.from_secret(params, x)
    assert params.is_element(pair.y)
    return pair


def hash_to_scalar(q: int, domain_tag: bytes, data: bytes) -> int:
    """SHA-256(domain_tag || data) interpreted big-endian, reduced mod q."""
    digest = hashlib.sha256(domain_tag + data).digest()
    return int.from_bytes(digest, "big") % q


def hash_to_group(params: GroupParams, domain_tag: bytes, data: bytes) -> int:
    """Deterministically map bytes into the order-q subgroup.

    The candidate digest (with a 4-byte big-endian retry counter) is
    interpreted mod p and cleared to the subgroup by raising to the
    cofactor (p-1)/q; counters are consumed until the result is neither
    0 nor 1.
    """
    cofactor = (params.p - 1) // params.q
    i = 0
    while True:
        digest = hashlib.sha256(domain_tag + data + i.to_bytes(4, "big")).digest()
        candidate = int.from_bytes(digest, "big") % params.p
        element = powmod(candidate, cofactor, params.p)
        if element not in (0, 1):
            assert params.is_element(element)
            return element
        i += 1


def concat_fields(fields: Iterable[bytes]) -> bytes:
    """Length-prefixed concatenation (4-byte big-endian per field).

    Used wherever several variable-length values feed one hash, so that
    field boundaries cannot be shifted.
    """
    out = bytearray()
    for f in fields:
        out += len(f).to_bytes(4, "big")
        out += f
    return bytes(out)


def _derive_extra_generators(p: int, q: int, g: int) -> tuple[int, int]:
    base = GroupParams(p=p, q=q, g=g, h=g, g2=g)  # temporary, only for hashing
    seed = p.to_bytes((p.bit_length() + 7) // 8, "big") + g.to_bytes(
        (p.bit_length() + 7) // 8, "big"
    )
    h = hash_to_group(base, b"blindfare/gen-h/v1", seed)
    g2 = hash_to_group(base, b"blindfare/gen-g2/v1", seed)
    return h, g2


def make_group(p: int, q: int, g: int) -> GroupParams:
    """Build validated GroupParams from (p, q, g), deriving h and g2."""
    h, g2 = _derive_extra_generators(p, q, g)
    params = GroupParams(p=p, q=q, g=g, h=h, g2=g2)
    params.validate()
    return params


def generate_group(p_bits: int, q_bits: int, rng) -> GroupParams:
    """Generate a fresh Schnorr group of the given sizes.

    Used for test-scale groups; the committed production parameters in
    params2048 were produced once by scripts/gen_group.py.
    """
    while True:
        q = rng.getrandbits(q_bits) | (1 << (q_bits - 1)) | 1
        if is_probable_prime(q):
            break
    while True:
        k = (rng.getrandbits(p_bits - q_bits) | (1 << (p_bits - q_bits - 1))) & ~1
        p = k * q + 1
        if p.bit_length() == p_bits and is_probable_prime(p):
            break
    cofactor = (p - 1) // q
    while True:
        g = powmod(rng.randrange(2, p), cofactor, p)
        if g not in (0, 1):
            break
    return make_group(p, q, g)


def tiny_group() -> GroupParams:
    """The p=23, q=11, g=2 group used by hand-checkable oracle tests."""
    return make_group(23, 11, 2)
