"""Defining sets D1, D1bar, D2 and the generator matrices of their codes.

Coordinates of a code are indexed by the defining-set elements in increasing
discrete-log order; generator rows come from the polynomial basis 1, a, ...,
a^(s-1) of the ambient field (plus a subfield basis for the D2 family).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

import numpy as np

from .field import Field, FieldElement, FieldError, make_field, relative_trace
from .linalg import gf_rank, gf_row_basis


class CodeError(ValueError):
    """Invalid defining set or code construction."""


@dataclass
class DefiningSet:
    """Ordered duplicate-free list of nonzero field elements with provenance."""

    field: Field
    elements: list  # FieldElements, increasing discrete log
    family: str  # "D1" | "D1BAR" | "D2"
    params: dict  # {"p": ..., "m": ..., "e": ... or None}

    def __len__(self) -> int:
        return len(self.elements)

    def logs(self) -> list:
        return [x.dlog() for x in self.elements]

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "field": self.field.to_json_dict(),
            "element_logs": self.logs(),
        }


@dataclass
class LinearCode:
    """[n, k] code over GF(p) given by a full-rank generator matrix."""

    p: int
    n: int
    k: int
    gen: np.ndarray
    provenance: dict = dc_field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "k": self.k,
            "gen": self.gen.tolist(),
            "provenance": self.provenance,
        }


def _half_trace_condition(field: Field, e: int, x: FieldElement) -> bool:
    """Membership test for D1: the half-field trace of x^(p^m+1) vanishes.

    For odd p this agrees with the trace from the full field (the two differ
    by the invertible factor 2); for p = 2 the full-field trace is identically
    zero on GF(2^m) and only the half-field reading reproduces the stated code
    lengths, so that reading is used for every p.
    """
    m = field.s // 2
    z = x ** (field.p**m + 1)
    return relative_trace(z, e, top=m).is_zero()


def defining_set_d1(field: Field, e: int) -> DefiningSet:
    """The set of nonzero x with vanishing trace of x^(p^m+1), s = 2m, e | m."""
    if field.s % 2:
        raise CodeError("D1 requires an even-degree field (s = 2m)")
    m = field.s // 2
    if m % e:
        raise CodeError(f"e = {e} does not divide m = {m}")
    if e == m:
        warnings.warn(
            "e = m is outside the two-weight theorem hypothesis (e < m); "
            "the defining set is empty",
            stacklevel=2,
        )
    elements = [x for x in field.nonzero_elements() if _half_trace_condition(field, e, x)]
    p = field.p
    if e < m:
        expected = p ** (2 * m - e) + p ** (m - e) - p**m - 1
        if len(elements) != expected:
            raise CodeError(
                f"D1 size {len(elements)} != predicted {expected} for (p,m,e)=({p},{m},{e})"
            )
    return DefiningSet(field=field, elements=elements, family="D1", params={"p": p, "m": m, "e": e})


def orbit_representatives(d1: DefiningSet, choice: str = "min") -> DefiningSet:
    """One representative per GF(p)*-orbit of a D1 set (the punctured set).

    ``choice`` picks the minimum- or maximum-discrete-log element of each
    orbit; either yields an equivalent code.
    """
    if d1.family != "D1":
        raise CodeError(f"expected a D1 defining set, got {d1.family}")
    if choice not in ("min", "max"):
        raise CodeError(f"unknown representative choice {choice!r}")
    field = d1.field
    p = field.p
    params = dict(d1.params, choice=choice)
    if p == 2:
        return DefiningSet(field, list(d1.elements), "D1BAR", params)
    scalars = [field.from_prime(a) for a in range(1, p)]
    member_logs = {x.dlog() for x in d1.elements}
    reps = []
    for x in d1.elements:
        orbit = sorted((a * x).dlog() for a in scalars)
        if any(d not in member_logs for d in orbit):
            raise CodeError("D1 set is not closed under GF(p)* scaling")
        target = orbit[0] if choice == "min" else orbit[-1]
        if x.dlog() == target:
            reps.append(x)
    reps.sort(key=lambda x: x.dlog())
    if len(reps) * (p - 1) != len(d1):
        raise CodeError("orbits do not partition D1 into full GF(p)* classes")
    return DefiningSet(field, reps, "D1BAR", params)


def _trace_row(field: Field, beta: FieldElement, columns: Sequence[FieldElement]) -> list:
    return [relative_trace(beta * d, 1).as_prime() for d in columns]


def code_from_defining_set(dset: DefiningSet) -> LinearCode:
    """The trace code with codewords (Tr(beta d))_{d in D} over GF(p).

    Generator rows are the codewords of the polynomial basis a^i, i < s; the
    dimension is the computed rank (a provenance warning is recorded when it
    falls short of the 2m the two-weight theorem predicts).
    """
    if len(dset) == 0:
        raise CodeError("empty defining set")
    field = dset.field
    rows = [_trace_row(field, field.generator**i, dset.elements) for i in range(field.s)]
    gen = np.array(rows, dtype=np.int64)
    return _finish_code(gen, field, dset, expected_k=field.s, construction="trace")


def code_d2(field: Field) -> LinearCode:
    """The three-weight code on all of GF(q)* with the extra norm-trace rows."""
    if field.s % 2:
        raise CodeError("D2 requires an even-degree field (s = 2m)")
    p, m = field.p, field.s // 2
    dset = DefiningSet(
        field=field,
        elements=list(field.nonzero_elements()),
        family="D2",
        params={"p": p, "m": m, "e": None},
    )
    rows = [_trace_row(field, field.generator**i, dset.elements) for i in range(field.s)]
    # basis of the half field GF(p^m): powers of a generator of its multiplicative group
    sub_gen = field.from_dlog((field.q - 1) // (p**m - 1)) if p**m > 2 else field.one
    npow = p**m + 1
    for j in range(m):
        gamma = sub_gen**j
        rows.append(
            [relative_trace(gamma * d**npow, 1, top=m).as_prime() for d in dset.elements]
        )
    gen = np.array(rows, dtype=np.int64)
    return _finish_code(gen, field, dset, expected_k=3 * m, construction="trace+norm")


def _finish_code(gen: np.ndarray, field: Field, dset: DefiningSet, expected_k: int,
                 construction: str) -> LinearCode:
    rank = gf_rank(gen, field.p)
    provenance = {
        "family": dset.family,
        "construction": construction,
        "params": dset.params,
        "modulus": list(field.modulus),
        "expected_k": expected_k,
        "warnings": [],
    }
    if rank < expected_k:
        msg = f"generator rank {rank} below expected {expected_k}"
        provenance["warnings"].append(msg)
        warnings.warn(msg, stacklevel=3)
        gen = gf_row_basis(gen, field.p)
    return LinearCode(p=field.p, n=gen.shape[1], k=rank, gen=gen % field.p,
                      provenance=provenance)


def encode(code: LinearCode, message: Sequence[int]) -> np.ndarray:
    """message . gen over GF(p)."""
    msg = np.asarray(message, dtype=np.int64)
    if msg.shape != (code.k,):
        raise CodeError(f"message length {msg.shape} != dimension {code.k}")
    return (msg @ code.gen) % code.p


def build_family_code(family: str, p: int, m: int, e: Optional[int] = None,
                      modulus: Optional[Sequence[int]] = None,
                      choice: str = "min") -> LinearCode:
    """Convenience constructor: family tag plus (p, m, e) to a LinearCode."""
    family = family.upper()
    if family == "D2":
        field = make_field(p, 2 * m, modulus)
        return code_d2(field)
    if e is None:
        raise CodeError(f"family {family} requires the trace parameter e")
    field = make_field(p, 2 * m, modulus)
    dset = defining_set_d1(field, e)
    if family == "D1BAR":
        dset = orbit_representatives(dset, choice=choice)
    elif family != "D1":
        raise CodeError(f"unknown family {family!r}")
    return code_from_defining_set(dset)
