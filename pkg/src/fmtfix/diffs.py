"""Line diff utilities: minimal LCS-based diff size and unified diff text."""

from __future__ import annotations

import difflib


def _lcs_length(a: list[str], b: list[str]) -> int:
    if not a or not b:
        return 0
    # one-row DP; inputs are pre-trimmed so these are short
    prev = [0] * (len(b) + 1)
    for i in range(1, len(a) + 1):
        cur = [0] * (len(b) + 1)
        ai = a[i - 1]
        for j in range(1, len(b) + 1):
            if ai == b[j - 1]:
                cur[j] = prev[j - 1] + 1
            else:
                cur[j] = cur[j - 1] if cur[j - 1] >= prev[j] else prev[j]
        prev = cur
    return prev[len(b)]


def diff_size(a: str, b: str) -> int:
    """Added plus deleted line count of a minimal line-based diff."""
    la = a.split("\n")
    lb = b.split("\n")
    lo = 0
    while lo < len(la) and lo < len(lb) and la[lo] == lb[lo]:
        lo += 1
    hi = 0
    while (hi < len(la) - lo and hi < len(lb) - lo
           and la[len(la) - 1 - hi] == lb[len(lb) - 1 - hi]):
        hi += 1
    mid_a = la[lo:len(la) - hi]
    mid_b = lb[lo:len(lb) - hi]
    lcs = _lcs_length(mid_a, mid_b)
    return (len(mid_a) - lcs) + (len(mid_b) - lcs)


def unified_diff(a: str, b: str, from_name: str = "a", to_name: str = "b") -> str:
    """Standard unified diff with 3 context lines."""
    lines = difflib.unified_diff(
        a.splitlines(keepends=True), b.splitlines(keepends=True),
        fromfile=from_name, tofile=to_name, n=3)
    return "".join(lines)
