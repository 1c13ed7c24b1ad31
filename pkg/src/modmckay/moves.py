"""The three certified edge moves of the modular McKay graph of SL_n(p).

Every p-restricted weight has an add_first edge; every nonzero weight
additionally has exactly one clearing edge, determined by the position s
of its first nonzero entry:

* add_first:      the first entry becomes the representative in
                  {1, ..., p-1} of (old + 1) mod (p-1);
* clear_forward:  entry s drops by 1 and entry s+1 becomes the
                  representative of (old + 1) mod (p-1), for s < n-1;
* clear_last:     entry n-1 drops by 1, all other entries zero.

For p = 2 the congruences mod p-1 = 1 are vacuous and the representative
set {1, ..., p-1} collapses to {1}; in particular add_first at a weight
with first entry 1 is a genuine self-loop.

These edges form a certified subgraph of the full McKay graph (more edges
may exist); :func:`certify_via_conormal` re-derives each one from the
conormal-index criterion as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conormal import block_form, conormal_indices
from .weights import (
    Weight,
    check_weight,
    is_p_restricted,
    p_adic_decompose,
    partition_to_weight,
    weight_to_partition,
)

ADD_FIRST = "add_first"
CLEAR_FORWARD = "clear_forward"
CLEAR_LAST = "clear_last"


class NotApplicableError(ValueError):
    """The requested move is not defined at this weight."""


class NoSuchEdgeError(ValueError):
    """The given pair of weights is not a certified edge."""


@dataclass(frozen=True)
class Move:
    """A certified edge label.  ``s`` is the cleared position for
    clear_forward (1 <= s < n-1) and None otherwise; it is derivable from
    the source weight but stored for auditability."""

    kind: str
    s: int | None = None

    def __post_init__(self):
        if self.kind not in (ADD_FIRST, CLEAR_FORWARD, CLEAR_LAST):
            raise ValueError(f"unknown move kind: {self.kind!r}")
        if (self.kind == CLEAR_FORWARD) != (self.s is not None):
            raise ValueError("clear_forward takes s, other kinds do not")
        if self.s is not None and self.s < 1:
            raise ValueError(f"clear position must be >= 1: {self.s}")

    def __str__(self) -> str:
        if self.kind == CLEAR_FORWARD:
            return f"clear_forward({self.s})"
        return self.kind

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.s is not None:
            out["s"] = self.s
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "Move":
        return cls(kind=data["kind"], s=data.get("s"))


def first_nonzero_position(w: Weight) -> int | None:
    """1-based position of the first nonzero entry, or None for zero."""
    for i, m in enumerate(w, start=1):
        if m:
            return i
    return None


def _rep(x: int, p: int) -> int:
    """The unique element of {1, ..., p-1} congruent to x mod p-1."""
    r = x % (p - 1)
    return r if r else p - 1


def _require_restricted(w: Weight, p: int) -> Weight:
    check_weight(w)
    if not is_p_restricted(w, p):
        raise ValueError(f"weight is not {p}-restricted: {w}")
    return w


def move_add_first(w: Weight, p: int) -> Weight:
    """Apply the add_first move."""
    _require_restricted(w, p)
    return (_rep(w[0] + 1, p),) + w[1:]


def move_clear_forward(w: Weight, p: int) -> Weight:
    """Apply the clear_forward move; requires the first nonzero entry to
    sit at some position s < n-1."""
    _require_restricted(w, p)
    s = first_nonzero_position(w)
    if s is None:
        raise NotApplicableError("clear_forward undefined at the zero weight")
    if s >= len(w):
        raise NotApplicableError(f"first nonzero entry at position {s} = n-1")
    out = list(w)
    out[s - 1] -= 1
    out[s] = _rep(out[s] + 1, p)
    return tuple(out)


def move_clear_last(w: Weight) -> Weight:
    """Apply the clear_last move; requires all entries before n-1 to be 0
    and the last entry positive."""
    check_weight(w)
    if any(w[:-1]) or w[-1] == 0:
        raise NotApplicableError(f"first nonzero entry not at position n-1: {w}")
    return w[:-1] + (w[-1] - 1,)


def apply_move(w: Weight, move: Move, p: int) -> Weight:
    """Apply ``move`` at ``w``, checking the stored clear position."""
    if move.kind == ADD_FIRST:
        return move_add_first(w, p)
    if move.kind == CLEAR_FORWARD:
        if first_nonzero_position(w) != move.s:
            raise NotApplicableError(
                f"clear_forward stored s={move.s} but first nonzero of {w} differs"
            )
        return move_clear_forward(w, p)
    return move_clear_last(w)


def certified_moves(w: Weight, p: int) -> list[tuple[Move, Weight]]:
    """The 1 or 2 certified edges out of ``w``: add_first always, plus the
    single applicable clearing move when ``w`` is nonzero."""
    _require_restricted(w, p)
    out = [(Move(ADD_FIRST), move_add_first(w, p))]
    s = first_nonzero_position(w)
    if s is None:
        return out
    if s < len(w):
        out.append((Move(CLEAR_FORWARD, s), move_clear_forward(w, p)))
    else:
        out.append((Move(CLEAR_LAST), move_clear_last(w)))
    return out


def validate_move(lam: Weight, mu: Weight, p: int) -> Move:
    """The move realizing the certified edge lam -> mu, or
    NoSuchEdgeError if there is none."""
    _require_restricted(mu, p)
    for move, target in certified_moves(lam, p):
        if target == mu:
            return move
    raise NoSuchEdgeError(f"no certified edge {lam} -> {mu} for p={p}")


def _conormal_index_for(lam: Weight, move: Move) -> int:
    """Row of the attached partition whose box-addition realizes ``move``:
    1 for add_first, 1 + a_1 for the clearing moves (a_1 = size of the
    partition's first constant block)."""
    if move.kind == ADD_FIRST:
        return 1
    return 1 + block_form(weight_to_partition(lam))[0][1]


def certify_via_conormal(lam: Weight, move: Move, p: int) -> bool:
    """Independently certify a move through the conormal-index criterion.

    True iff the responsible row index is conormal for the attached
    partition AND the weight of the box-added partition p-adically
    witnesses the move's target: it equals the target when p-restricted,
    and otherwise its digits are [nu, e_k] with target = nu + e_k (the
    entry bumped to p splits off one Frobenius-twisted standard factor).
    """
    _require_restricted(lam, p)
    mu = apply_move(lam, move, p)
    parts = weight_to_partition(lam)
    i = _conormal_index_for(lam, move)
    if i not in conormal_indices(parts, p):
        return False
    bumped = tuple(x + (1 if j == i else 0) for j, x in enumerate(parts, start=1))
    mu_prime = partition_to_weight(bumped)
    digits = p_adic_decompose(mu_prime, p)
    if is_p_restricted(mu_prime, p):
        return mu == mu_prime
    if len(digits) != 2:
        return False
    base, twist = digits
    if sum(twist) != 1:
        return False
    return mu == tuple(a + b for a, b in zip(base, twist))
