"""Journaled key-value store with explicit durability points.

Writes stage in memory and only become durable at sync().  The fault
harness arms a journal so that one specific sync call "loses power"
either just before the flush (staged writes vanish) or just after it
(writes durable, but the actor dies before sending anything).  recover()
models a process restart: staged writes are dropped and the readable
state is rebuilt purely from the durable log.

Values must be bytes; whatever survives a crash must have been data,
never a live Python object.
"""

from __future__ import annotations


class CrashPoint(Exception):
    """Simulated power cut raised from an armed sync point."""


BEFORE_SYNC = "before_sync"
AFTER_SYNC = "after_sync"


class Journal:
    def __init__(self) -> None:
        self._log: list[tuple[str, bytes | None]] = []  # durable, append-only
        self._staged: list[tuple[str, bytes | None]] = []
        self._view: dict[str, bytes] = {}  # durable + staged, read-your-writes
        self._armed: str | None = None
        self.sync_count = 0

    def put(self, key: str, value: bytes) -> None:
        if not isinstance(value, bytes):
            raise TypeError("journal values must be bytes")
        self._staged.append((key, value))
        self._view[key] = value

    def delete(self, key: str) -> None:
        self._staged.append((key, None))
        self._view.pop(key, None)

    def get(self, key: str) -> bytes | None:
        return self._view.get(key)

    def keys(self) -> list[str]:
        return sorted(self._view)

    def arm_crash(self, mode: str) -> None:
        if mode not in (BEFORE_SYNC, AFTER_SYNC):
            raise ValueError(f"unknown crash mode {mode!r}")
        self._armed = mode

    def sync(self) -> None:
        self.sync_count += 1
        if self._armed == BEFORE_SYNC:
            self._armed = None
            self._drop_staged()
            raise CrashPoint("power lost before flush")
        self._log.extend(self._staged)
        self._staged.clear()
        if self._armed == AFTER_SYNC:
            self._armed = None
            raise CrashPoint("power lost after flush")

    def _drop_staged(self) -> None:
        self._staged.clear()
        self._rebuild_view()

    def _rebuild_view(self) -> None:
        self._view = {}
        for key, value in self._log:
            if value is None:
                self._view.pop(key, None)
            else:
                self._view[key] = value

    def recover(self) -> None:
        """Restart from the durable log, discarding anything staged."""
        self._armed = None
        self._drop_staged()

    def durable_snapshot(self) -> dict[str, bytes]:
        view: dict[str, bytes] = {}
        for key, value in self._log:
            if value is None:
                view.pop(key, None)
            else:
                view[key] = value
        return view
