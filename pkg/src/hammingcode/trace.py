"""Step-by-step text rendering of how a received word is checked and corrected.

The layout is fixed (column widths depend only on ``n`` and ``k``) so that
rendered traces can be compared byte for byte.
"""

from __future__ import annotations

from .codec import Status, _block, compute_checking_number, decode
from .params import BitsLike, CodeParams, check_mask

__all__ = ["render_trace"]


def render_trace(word: BitsLike, params: CodeParams) -> str:
    received = _block(word, params.n, "received word")
    k, n = params.k, params.n
    pw = max(len("position"), len(str(n)))
    bw = max(len("binary"), k)

    lines = [
        f"code {params}: n={n} m={params.m} k={k}",
        f"received {received}",
    ]
    for i in range(k):
        members = sorted(check_mask(i, n))
        lines.append("")
        lines.append(
            f"group {i} (check position {1 << i}): "
            + "+".join(f"x{p}" for p in members)
        )
        lines.append(f"  {'position':>{pw}}  {'binary':>{bw}}  bit")
        for p in members:
            lines.append(f"  {p:>{pw}}  {format(p, f'0{k}b'):>{bw}}  {received.bit(p):>3}")
        values = [received.bit(p) for p in members]
        total = sum(values) % 2
        lines.append(f"  sum {'+'.join(map(str, values))} = {total} (mod 2) -> s{i + 1} = {total}")

    checking = compute_checking_number(received, params)
    outcome = decode(received, params)
    lines.append("")
    lines.append(
        " ".join(f"s{i}" for i in range(k, 0, -1))
        + " = "
        + " ".join(str(s) for s in reversed(checking.bits))
    )
    c = checking.value
    if outcome.status is Status.CLEAN:
        lines.append("checking number 0; no error")
    elif outcome.status is Status.CORRECTED:
        lines.append(f"checking number {checking.binary()}₂ = {c}; flip position {c}")
    else:
        lines.append(
            f"checking number {checking.binary()}₂ = {c} exceeds n = {n}; uncorrectable"
        )
    return "\n".join(lines) + "\n"
