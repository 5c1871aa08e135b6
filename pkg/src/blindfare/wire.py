"""TLV wire encoding shared by the session protocol and token formats.

Every field is (1-byte type, 2-byte big-endian length, value).  Parsing
is strict: truncated streams, trailing bytes, and duplicate fields are
rejected, which is what makes the canonical encodings injective.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum


class WireError(ValueError):
    pass


def tlv(ftype: int, value: bytes) -> bytes:
    if not 0 <= ftype <= 0xFF:
        raise WireError("field type out of range")
    if len(value) > 0xFFFF:
        raise WireError("field too long")
    return bytes([ftype]) + len(value).to_bytes(2, "big") + value


def parse_tlvs(data: bytes) -> list[tuple[int, bytes]]:
    fields = []
    i = 0
    while i < len(data):
        if i + 3 > len(data):
            raise WireError("truncated TLV header")
        ftype = data[i]
        length = int.from_bytes(data[i + 1 : i + 3], "big")
        i += 3
        if i + length > len(data):
            raise WireError("truncated TLV value")
        fields.append((ftype, data[i : i + length]))
        i += length
    return fields


def parse_tlv_map(data: bytes) -> dict[int, bytes]:
    """Strict map view: duplicate field types are an error."""
    out: dict[int, bytes] = {}
    for ftype, value in parse_tlvs(data):
        if ftype in out:
            raise WireError(f"duplicate field 0x{ftype:02x}")
        out[ftype] = value
    return out


class MsgKind(IntEnum):
    INIT = 1
    ANNOUNCE = 2
    CHALLENGE = 3
    INTERMEDIATE = 4
    ACK = 5


# Session envelope field codes.
F_SESSION_ID = 0x01
F_KIND = 0x02
F_RUN = 0x03
F_PUBLIC_PART = 0x10
F_COMMITMENT = 0x11
F_POK = 0x12
F_ANN_A = 0x13
F_ANN_B = 0x14
F_CHALLENGE = 0x15
F_INTERMEDIATE = 0x16

SESSION_ID_LEN = 16


@dataclass(frozen=True)
class Envelope:
    """One session-protocol message; session_id is always the first field."""

    session_id: bytes
    kind: MsgKind
    run: int
    fields: dict[int, bytes]

    def encode(self) -> bytes:
        out = tlv(F_SESSION_ID, self.session_id)
        out += tlv(F_KIND, bytes([self.kind]))
        out += tlv(F_RUN, self.run.to_bytes(4, "big"))
        for ftype in sorted(self.fields):
            out += tlv(ftype, self.fields[ftype])
        return out

    @classmethod
    def decode(cls, data: bytes) -> "Envelope":
        parsed = parse_tlvs(data)
        if not parsed or parsed[0][0] != F_SESSION_ID:
            raise WireError("session_id must be the first field")
        session_id = parsed[0][1]
        if len(session_id) != SESSION_ID_LEN:
            raise WireError("bad session id length")
        fields: dict[int, bytes] = {}
        for ftype, value in parsed[1:]:
            if ftype in fields:
                raise WireError(f"duplicate field 0x{ftype:02x}")
            fields[ftype] = value
        try:
            kind = MsgKind(fields.pop(F_KIND)[0])
            run = int.from_bytes(fields.pop(F_RUN), "big")
        except (KeyError, IndexError, ValueError) as exc:
            raise WireError(f"bad envelope header: {exc}") from exc
        return cls(session_id=session_id, kind=kind, run=run, fields=fields)
