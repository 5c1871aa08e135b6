"""Partially blind signatures over a split message: a secret part the
signer never sees and a public part both sides agree on.

The scheme is the four-move blind Schnorr variant with a per-public-part
generator z derived by hashing, yielding four-scalar signatures
(rho, omega, sigma, delta) with verification relation

    omega + delta == H(g^rho * y^omega || g^sigma * z^delta
                       || z || public_part || secret_msg)   (mod q)

Two properties carry the whole ticketing design and both are covered by
executable oracles in the test suite:

  * message hiding: the signer only ever sees the blinded challenge e,
    never the secret message;
  * signature unlinkability: for any completed issuance transcript and
    ANY valid signature under the same public part, there exist blinding
    factors connecting the two (see blindness_witness), so the signer's
    view is consistent with every signature it ever produced.

Protocol phase naming note: the user-side blinding conceptually happens
"first", but on the wire the signer's announcement (a, b) travels before
the user's challenge e.  The session layer maps its phase names onto
this message order; docs there spell out the correspondence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groups import (
    GroupError,
    GroupParams,
    KeyPair,
    concat_fields,
    hash_to_group,
    hash_to_scalar,
    random_nonzero_scalar,
    random_scalar,
)

Z_TAG = b"blindfare/pbs-z/v1"
EPS_TAG = b"blindfare/pbs-eps/v1"


class PbsError(ValueError):
    """Protocol-level failure during blind issuance."""


def derive_z(params: GroupParams, public_part: bytes) -> int:
    """The per-public-part generator z; both sides recompute it."""
    return hash_to_group(params, Z_TAG, public_part)


@dataclass
class SignerAnnouncement:
    """Signer-side first move: commitment pair (a, b) plus the retained
    nonces.  A single announcement may answer exactly one challenge."""

    public_part: bytes
    z: int
    a: int
    b: int
    u: int
    s_prime: int
    d: int
    consumed: bool = False

    def public_view(self) -> tuple[int, int]:
        return self.a, self.b


@dataclass(frozen=True)
class BlindedChallenge:
    e: int


@dataclass(frozen=True)
class UserBlindingState:
    """Everything the user must persist before releasing e."""

    public_part: bytes
    secret_msg: bytes
    signer_pub: int
    z: int
    a: int
    b: int
    t1: int
    t2: int
    t3: int
    t4: int
    epsilon: int
    e: int


@dataclass(frozen=True)
class IntermediateSignature:
    r: int
    c: int
    s_prime: int
    d: int


@dataclass(frozen=True)
class PartiallyBlindSignature:
    rho: int
    omega: int
    sigma: int
    delta: int

    def scalars(self) -> tuple[int, int, int, int]:
        return (self.rho, self.omega, self.sigma, self.delta)


@dataclass(frozen=True)
class SignerTranscript:
    """The signer's complete view of one issuance, kept for disputes and
    for the unlinkability oracle."""

    public_part: bytes
    signer_pub: int
    a: int
    b: int
    e: int
    r: int
    c: int
    s_prime: int
    d: int


@dataclass(frozen=True)
class BlindingFactors:
    t1: int
    t2: int
    t3: int
    t4: int


def signer_announce(params: GroupParams, key: KeyPair, public_part: bytes, rng) -> SignerAnnouncement:
    if not public_part:
        raise PbsError("public part must be non-empty")
    u = random_nonzero_scalar(params, rng)
    s_prime = random_nonzero_scalar(params, rng)
    d = random_nonzero_scalar(params, rng)
    z = derive_z(params, public_part)
    a = params.exp(params.g, u)
    b = params.mul(params.exp(params.g, s_prime), params.exp(z, d))
    return SignerAnnouncement(
        public_part=public_part, z=z, a=a, b=b, u=u, s_prime=s_prime, d=d
    )


def _epsilon(
    params: GroupParams,
    alpha: int,
    beta: int,
    z: int,
    public_part: bytes,
    secret_msg: bytes,
) -> int:
    payload = concat_fields(
        [
            params.encode_element(alpha),
            params.encode_element(beta),
            params.encode_element(z),
            public_part,
            secret_msg,
        ]
    )
    return hash_to_scalar(params.q, EPS_TAG, payload)


def user_blind(
    params: GroupParams,
    announcement: tuple[int, int],
    signer_pub: int,
    public_part: bytes,
    secret_msg: bytes,
    rng,
) -> tuple[BlindedChallenge, UserBlindingState]:
    """Blind the secret message against the signer's announcement.

    The caller must persist the returned state before the challenge is
    released to the signer; the session layer enforces this.
    """
    a, b = announcement
    for name, v in (("a", a), ("b", b)):
        if v == 1 or not params.is_element(v):
            raise PbsError(f"announcement component {name} is not a valid group element")
    if not params.is_element(signer_pub):
        raise PbsError("signer public key is not a valid group element")
    z = derive_z(params, public_part)
    t1 = random_scalar(params, rng)
    t2 = random_scalar(params, rng)
    t3 = random_scalar(params, rng)
    t4 = random_scalar(params, rng)
    alpha = params.mul(a, params.exp(params.g, t1), params.exp(signer_pub, t2))
    beta = params.mul(b, params.exp(params.g, t3), params.exp(z, t4))
    epsilon = _epsilon(params, alpha, beta, z, public_part, secret_msg)
    e = (epsilon - t2 - t4) % params.q
    state = UserBlindingState(
        public_part=public_part,
        secret_msg=secret_msg,
        signer_pub=signer_pub,
        z=z,
        a=a,
        b=b,
        t1=t1,
        t2=t2,
        t3=t3,
        t4=t4,
        epsilon=epsilon,
        e=e,
    )
    return BlindedChallenge(e=e), state


def signer_respond(
    params: GroupParams, announcement: SignerAnnouncement, key: KeyPair, e: int
) -> IntermediateSignature:
    if announcement.consumed:
        raise PbsError("announcement already answered a challenge")
    if not 0 <= e < params.q:
        raise PbsError("challenge out of range")
    announcement.consumed = True
    c = (e - announcement.d) % params.q
    r = (announcement.u - c * key.x) % params.q
    return IntermediateSignature(r=r, c=c, s_prime=announcement.s_prime, d=announcement.d)


def user_finalize(
    params: GroupParams, state: UserBlindingState, intermediate: IntermediateSignature
) -> PartiallyBlindSignature:
    """Unblind the intermediate into the final signature.

    Rejects any intermediate that does not yield a verifying signature;
    the raised error carries both halves so a dispute can replay them.
    """
    if (intermediate.c + intermediate.d) % params.q != state.e:
        raise PbsError(f"intermediate does not answer stored challenge: {intermediate}")
    sig = PartiallyBlindSignature(
        rho=(intermediate.r + state.t1) % params.q,
        omega=(intermediate.c + state.t2) % params.q,
        sigma=(intermediate.s_prime + state.t3) % params.q,
        delta=(intermediate.d + state.t4) % params.q,
    )
    if not verify(params, state.signer_pub, state.public_part, state.secret_msg, sig):
        raise PbsError(
            f"finalized signature failed verification; transcript e={state.e} "
            f"intermediate={intermediate}"
        )
    return sig


def verify(
    params: GroupParams,
    signer_pub: int,
    public_part: bytes,
    secret_msg: bytes,
    sig: PartiallyBlindSignature,
) -> bool:
    for s in sig.scalars():
        if not 0 <= s < params.q:
            return False
    if not params.is_element(signer_pub):
        return False
    z = derive_z(params, public_part)
    left = params.mul(params.exp(params.g, sig.rho), params.exp(signer_pub, sig.omega))
    right = params.mul(params.exp(params.g, sig.sigma), params.exp(z, sig.delta))
    expect = _epsilon(params, left, right, z, public_part, secret_msg)
    return (sig.omega + sig.delta) % params.q == expect


def blindness_witness(
    params: GroupParams,
    transcript: SignerTranscript,
    sig: PartiallyBlindSignature,
    public_part: bytes,
    secret_msg: bytes,
) -> BlindingFactors | None:
    """Blinding factors connecting a signer transcript to a signature.

    For every valid transcript and every valid signature under the same
    public part the factors exist and pass all consistency checks, which
    is exactly the unlinkability property: the signer cannot tell which
    of its transcripts produced a given signature.  Returns None when
    the pair is inconsistent (different public part, invalid signature,
    tampered transcript).
    """
    if transcript.public_part != public_part:
        return None
    if not verify(params, transcript.signer_pub, public_part, secret_msg, sig):
        return None
    q = params.q
    t1 = (sig.rho - transcript.r) % q
    t2 = (sig.omega - transcript.c) % q
    t3 = (sig.sigma - transcript.s_prime) % q
    t4 = (sig.delta - transcript.d) % q
    # epsilon consistency: the challenge the signer saw must match what
    # these factors imply, e = (omega + delta) - t2 - t4.
    if ((sig.omega + sig.delta) - t2 - t4) % q != transcript.e % q:
        return None
    # group consistency: unblinding the announcement with these factors
    # must land on the commitments the verification relation recomputes.
    z = derive_z(params, public_part)
    alpha = params.mul(
        transcript.a, params.exp(params.g, t1), params.exp(transcript.signer_pub, t2)
    )
    beta = params.mul(transcript.b, params.exp(params.g, t3), params.exp(z, t4))
    left = params.mul(params.exp(params.g, sig.rho), params.exp(transcript.signer_pub, sig.omega))
    right = params.mul(params.exp(params.g, sig.sigma), params.exp(z, sig.delta))
    if alpha != left or beta != right:
        return None
    return BlindingFactors(t1=t1, t2=t2, t3=t3, t4=t4)


def issue(
    params: GroupParams,
    key: KeyPair,
    public_part: bytes,
    secret_msg: bytes,
    rng,
) -> tuple[PartiallyBlindSignature, SignerTranscript]:
    """Run the whole five-step flow in-process (no transport, no faults).

    Convenience for tests, benches, and the blindness game; production
    issuance goes through the durable session layer.
    """
    ann = signer_announce(params, key, public_part, rng)
    challenge, state = user_blind(
        params, ann.public_view(), key.y, public_part, secret_msg, rng
    )
    inter = signer_respond(params, ann, key, challenge.e)
    sig = user_finalize(params, state, inter)
    transcript = SignerTranscript(
        public_part=public_part,
        signer_pub=key.y,
        a=ann.a,
        b=ann.b,
        e=challenge.e,
        r=inter.r,
        c=inter.c,
        s_prime=inter.s_prime,
        d=inter.d,
    )
    return sig, transcript


__all__ = [
    "PbsError",
    "SignerAnnouncement",
    "BlindedChallenge",
    "UserBlindingState",
    "IntermediateSignature",
    "PartiallyBlindSignature",
    "SignerTranscript",
    "BlindingFactors",
    "derive_z",
    "signer_announce",
    "user_blind",
    "signer_respond",
    "user_finalize",
    "verify",
    "blindness_witness",
    "issue",
]
