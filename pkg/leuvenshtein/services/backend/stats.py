"""
Backend Statistics

Counts bootstraps and linear operations so every run can be reconciled
against the PBS accounting of the algorithm. Each bootstrap is attributed
to one phase tag.
"""

from dataclasses import dataclass, field
from typing import Any, Dict
import logging
import threading

logger = logging.getLogger(__name__)

PBS_TAGS = ("equality", "kernel", "refresh", "preprocess")


@dataclass
class BackendStats:
    """Monotone counters for one backend (or a merged set of backends)."""

    pbs_count: int = 0
    refresh_count: int = 0
    linear_op_count: int = 0
    encrypt_count: int = 0
    pbs_by_tag: Dict[str, int] = field(default_factory=lambda: {tag: 0 for tag in PBS_TAGS})
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def add_pbs(self, tag: str) -> None:
        """Record one bootstrap under `tag`."""
        with self._lock:
            self.pbs_count += 1
            self.pbs_by_tag[tag] = self.pbs_by_tag.get(tag, 0) + 1
            if tag == "refresh":
                self.refresh_count += 1

    def add_linear(self, count: int = 1) -> None:
        with self._lock:
            self.linear_op_count += count

    def add_encrypt(self) -> None:
        with self._lock:
            self.encrypt_count += 1

    def snapshot(self) -> "BackendStats":
        """Consistent copy, safe to diff against a later snapshot."""
        with self._lock:
            return BackendStats(
                pbs_count=self.pbs_count,
                refresh_count=self.refresh_count,
                linear_op_count=self.linear_op_count,
                encrypt_count=self.encrypt_count,
                pbs_by_tag=dict(self.pbs_by_tag),
            )

    def since(self, earlier: "BackendStats") -> "BackendStats":
        """Counter deltas accumulated after `earlier` was taken."""
        now = self.snapshot()
        return BackendStats(
            pbs_count=now.pbs_count - earlier.pbs_count,
            refresh_count=now.refresh_count - earlier.refresh_count,
            linear_op_count=now.linear_op_count - earlier.linear_op_count,
            encrypt_count=now.encrypt_count - earlier.encrypt_count,
            pbs_by_tag={
                tag: now.pbs_by_tag.get(tag, 0) - earlier.pbs_by_tag.get(tag, 0)
                for tag in set(now.pbs_by_tag) | set(earlier.pbs_by_tag)
            },
        )

    def merge(self, other: "BackendStats") -> None:
        """Fold another sink into this one (batch aggregation)."""
        theirs = other.snapshot()
        with self._lock:
            self.pbs_count += theirs.pbs_count
            self.refresh_count += theirs.refresh_count
            self.linear_op_count += theirs.linear_op_count
            self.encrypt_count += theirs.encrypt_count
            for tag, count in theirs.pbs_by_tag.items():
                self.pbs_by_tag[tag] = self.pbs_by_tag.get(tag, 0) + count
        logger.debug(f"Merged stats sink: +{theirs.pbs_count} PBS")

    def pbs(self, tag: str) -> int:
        return self.pbs_by_tag.get(tag, 0)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output."""
        snap = self.snapshot()
        return {
            "pbs_count": snap.pbs_count,
            "refresh_count": snap.refresh_count,
            "linear_op_count": snap.linear_op_count,
            "encrypt_count": snap.encrypt_count,
            "pbs_by_tag": {tag: snap.pbs_by_tag.get(tag, 0) for tag in sorted(snap.pbs_by_tag)},
        }
