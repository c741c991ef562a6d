"""Token-level diff between two specs, built on the same DP as the
edit-distance metric so op counts and distances always agree."""

from __future__ import annotations

from dataclasses import dataclass

from .tokenizer import TokenStream


@dataclass(frozen=True)
class DiffOp:
    op: str  # equal | insert | delete | replace
    tokens_a: tuple[str, ...]
    tokens_b: tuple[str, ...]


@dataclass(frozen=True)
class DiffResult:
    spec_a: tuple[str, str]
    spec_b: tuple[str, str]
    ops: tuple[DiffOp, ...]
    token_ld: int

    def to_jsonable(self) -> dict:
        return {
            "spec_a": {"notation": self.spec_a[0], "example": self.spec_a[1]},
            "spec_b": {"notation": self.spec_b[0], "example": self.spec_b[1]},
            "token_ld": self.token_ld,
            "ops": [
                {"op": o.op, "tokens_a": list(o.tokens_a), "tokens_b": list(o.tokens_b)}
                for o in self.ops
            ],
        }


def _edit_ops(a: list[str], b: list[str]) -> tuple[list[tuple[str, int, int]], int]:
    """Full DP with backtrack; returns unit ops and the distance."""
    n, m = len(a), len(b)
    dp = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        dp[i][0] = i
    for j in range(m + 1):
        dp[0][j] = j
    for i in range(1, n + 1):
        ai = a[i - 1]
        row, prev = dp[i], dp[i - 1]
        for j in range(1, m + 1):
            cost = 0 if ai == b[j - 1] else 1
            row[j] = min(prev[j] + 1, row[j - 1] + 1, prev[j - 1] + cost)
    ops: list[tuple[str, int, int]] = []
    i, j = n, m
    while i > 0 or j > 0:
        if i > 0 and j > 0 and dp[i][j] == dp[i - 1][j - 1] + (0 if a[i - 1] == b[j - 1] else 1):
            ops.append(("equal" if a[i - 1] == b[j - 1] else "replace", i - 1, j - 1))
            i, j = i - 1, j - 1
        elif i > 0 and dp[i][j] == dp[i - 1][j] + 1:
            ops.append(("delete", i - 1, j))
            i -= 1
        else:
            ops.append(("insert", i, j - 1))
            j -= 1
    ops.reverse()
    return ops, dp[n][m]


def token_diff(a: TokenStream, b: TokenStream) -> DiffResult:
    """Diff of lexeme sequences (comments excluded), contiguous runs merged."""
    lex_a = a.lexemes()
    lex_b = b.lexemes()
    unit_ops, dist = _edit_ops(lex_a, lex_b)

    merged: list[DiffOp] = []
    run_op: str | None = None
    run_a: list[str] = []
    run_b: list[str] = []

    def flush() -> None:
        nonlocal run_op, run_a, run_b
        if run_op is not None:
            merged.append(DiffOp(run_op, tuple(run_a), tuple(run_b)))
        run_op, run_a, run_b = None, [], []

    for op, ia, ib in unit_ops:
        if op != run_op:
            flush()
            run_op = op
        if op in ("equal", "replace", "delete"):
            run_a.append(lex_a[ia])
        if op in ("equal", "replace", "insert"):
            run_b.append(lex_b[ib])
    flush()

    return DiffResult(
        spec_a=(a.notation_id, a.example_id),
        spec_b=(b.notation_id, b.example_id),
        ops=tuple(merged),
        token_ld=dist,
    )
