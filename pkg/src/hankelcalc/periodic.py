"""Eventually periodic sequences and the star notation ``(1, (3, 0)^*)``."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from .errors import ParameterError, TruncationError
from .series import Coeff, format_coeff, to_rational


def _primitive(period: tuple) -> tuple:
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and period == period[:d] * (n // d):
            return period[:d]
    return period


@dataclass(frozen=True)
class EPSeq:
    """``preperiod`` followed by ``period`` repeated forever.

    An empty period makes the sequence finite.  The period is stored in
    primitive form and folded back into the preperiod where possible, so
    equal sequences compare equal.
    """

    preperiod: tuple = ()
    period: tuple = ()
    conjectural: bool = field(default=False, compare=False)

    def __post_init__(self):
        pre = tuple(self.preperiod)
        per = _primitive(tuple(self.period))
        while per and pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = per[-1:] + per[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @classmethod
    def finite(cls, values: Sequence) -> "EPSeq":
        return cls(tuple(values), ())

    @property
    def is_finite(self) -> bool:
        return not self.period

    def __len__(self):
        if self.period:
            raise TypeError("an eventually periodic sequence is infinite")
        return len(self.preperiod)

    @property
    def known_length(self) -> float:
        return float("inf") if self.period else len(self.preperiod)

    def __getitem__(self, i: int) -> Coeff:
        if i < 0:
            raise IndexError(i)
        if i < len(self.preperiod):
            return self.preperiod[i]
        if not self.period:
            raise TruncationError(f"index {i} beyond finite sequence of length {len(self.preperiod)}", i)
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, n: int) -> list:
        return [self[i] for i in range(n)]

    def __str__(self):
        return render(self)


def render(s: EPSeq) -> str:
    pre = [format_coeff(c) for c in s.preperiod]
    if not s.period:
        return "(" + ", ".join(pre) + ")"
    star = "(" + ", ".join(format_coeff(c) for c in s.period) + ")^*"
    if not pre:
        return star
    return "(" + ", ".join(pre + [star]) + ")"


def render_plain(s: EPSeq) -> str:
    """The ``pre: ... | per: ...`` exchange form."""
    pre = ", ".join(format_coeff(c) for c in s.preperiod)
    per = ", ".join(format_coeff(c) for c in s.period)
    return f"pre: {pre} | per: {per}"


_ITEM = re.compile(r"\s*([-+]?\d+(?:/\d+)?)\s*")


def parse_star(text: str) -> EPSeq:
    """Parse ``(1,(3,0)^*)``, ``(1,(3,0)*)``, ``(1)^*`` or ``pre: 1 | per: 3, 0``."""
    text = text.strip()
    if text.startswith("pre:") or "| per:" in text:
        left, _, right = text.partition("|")
        pre = _parse_list(left.split(":", 1)[1])
        per = _parse_list(right.split(":", 1)[1]) if right else []
        return EPSeq(tuple(pre), tuple(per))
    star = re.fullmatch(r"\((.*)\)\s*\^?\*", text)
    if star and "(" not in star.group(1):
        return EPSeq((), tuple(_parse_list(star.group(1))))
    if not (text.startswith("(") and text.endswith(")")):
        raise ParameterError(f"not a star-notation sequence: {text!r}")
    body = text[1:-1]
    inner = re.search(r"\(([^()]*)\)\s*\^?\*\s*$", body)
    if inner:
        head = body[: inner.start()].rstrip().rstrip(",")
        pre = _parse_list(head) if head.strip() else []
        return EPSeq(tuple(pre), tuple(_parse_list(inner.group(1))))
    if "(" in body or "*" in body:
        raise ParameterError(f"malformed star notation: {text!r}")
    return EPSeq(tuple(_parse_list(body)), ())


def _parse_list(text: str) -> list:
    items = [t for t in text.split(",")]
    if len(items) == 1 and not items[0].strip():
        return []
    out = []
    for t in items:
        if not _ITEM.fullmatch(t):
            raise ParameterError(f"bad sequence entry {t!r}")
        out.append(to_rational(t.strip()))
    return out


def detect_periodicity(s: Sequence, min_reps: int = 3) -> EPSeq | None:
    """Smallest period (then shortest preperiod) explaining the whole observed tail.

    The period must be seen at least ``min_reps`` times.  Finite evidence
    only: the result is marked ``conjectural``.
    """
    if min_reps < 3:
        raise ParameterError("min_reps must be >= 3")
    s = list(s)
    n = len(s)
    for p in range(1, n // min_reps + 1):
        # latest index where s[i] != s[i + p]; the periodic tail starts after it
        start = 0
        for i in range(n - p - 1, -1, -1):
            if s[i] != s[i + p]:
                start = i + 1
                break
        if n - start >= min_reps * p:
            return EPSeq(tuple(s[:start]), tuple(s[start : start + p]), conjectural=True)
    return None
