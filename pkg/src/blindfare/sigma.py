"""Schnorr signatures, Pedersen commitments, and a Fiat-Shamir proof of
commitment opening.

The Schnorr signature signs gate-issued records (check-in tokens,
check-out records).  The Pedersen commitment plus proof-of-opening binds
an issuance session to one hidden message, which is what makes restarted
sessions provably reuse the same secret.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import GroupParams, KeyPair, concat_fields, hash_to_scalar, random_scalar

SCHNORR_TAG = b"blindfare/schnorr/v1"
POK_TAG = b"blindfare/pok/v1"


@dataclass(frozen=True)
class SchnorrSignature:
    c: int
    s: int


def schnorr_sign(params: GroupParams, key: KeyPair, msg: bytes, rng) -> SchnorrSignature:
    k = random_scalar(params, rng)
    commit = params.exp(params.g, k)
    c = hash_to_scalar(
        params.q, SCHNORR_TAG, concat_fields([params.encode_element(commit), msg])
    )
    s = (k - c * key.x) % params.q
    return SchnorrSignature(c=c, s=s)


def schnorr_verify(params: GroupParams, y: int, msg: bytes, sig: SchnorrSignature) -> bool:
    """Stateless verification; returns False (never raises) on bad input."""
    if not (0 <= sig.c < params.q and 0 <= sig.s < params.q):
        return False
    if not params.is_element(y):
        return False
    commit = params.mul(params.exp(params.g, sig.s), params.exp(y, sig.c))
    expect = hash_to_scalar(
        params.q, SCHNORR_TAG, concat_fields([params.encode_element(commit), msg])
    )
    return expect == sig.c


@dataclass(frozen=True)
class PedersenCommitment:
    c: int


@dataclass(frozen=True)
class CommitmentOpening:
    m: int
    r: int


@dataclass(frozen=True)
class OpeningProof:
    """Non-interactive proof of knowledge of a commitment opening.

    A = g^k1 * h^k2, ch = H(A || C || context), z1 = k1 + ch*m,
    z2 = k2 + ch*r.  The context string binds the proof to one session so
    it cannot be replayed into another.
    """

    a: int
    z1: int
    z2: int


def pedersen_commit(params: GroupParams, m: int, rng) -> tuple[PedersenCommitment, CommitmentOpening]:
    r = random_scalar(params, rng)
    c = params.mul(params.exp(params.g, m), params.exp(params.h, r))
    return PedersenCommitment(c=c), CommitmentOpening(m=m, r=r)


def _pok_challenge(params: GroupParams, a: int, c: int, context: bytes) -> int:
    payload = concat_fields(
        [params.encode_element(a), params.encode_element(c), context]
    )
    return hash_to_scalar(params.q, POK_TAG, payload)


def pok_prove(
    params: GroupParams,
    commitment: PedersenCommitment,
    opening: CommitmentOpening,
    context: bytes,
    rng,
) -> OpeningProof:
    k1 = random_scalar(params, rng)
    k2 = random_scalar(params, rng)
    a = params.mul(params.exp(params.g, k1), params.exp(params.h, k2))
    ch = _pok_challenge(params, a, commitment.c, context)
    z1 = (k1 + ch * opening.m) % params.q
    z2 = (k2 + ch * opening.r) % params.q
    return OpeningProof(a=a, z1=z1, z2=z2)


def pok_verify(
    params: GroupParams,
    commitment: PedersenCommitment,
    context: bytes,
    proof: OpeningProof,
) -> bool:
    if not (0 <= proof.z1 < params.q and 0 <= proof.z2 < params.q):
        return False
    if not (params.is_element(proof.a) and params.is_element(commitment.c)):
        return False
    ch = _pok_challenge(params, proof.a, commitment.c, context)
    lhs = params.mul(params.exp(params.g, proof.z1), params.exp(params.h, proof.z2))
    rhs = params.mul(proof.a, params.exp(commitment.c, ch))
    return lhs == rhs
