"""Closed-form values of F, M1 and F-coindex for every derived graph.

Each function takes only the base graph's :class:`IndexReport`, so it can
use nothing except ``n, m, M1, M2, F, ReZG3, Xi4``. The published example
tables live separately in :data:`PUBLISHED_EXAMPLES`. They are printed
formulas in the family size ``n``, kept verbatim (including the wrong ones)
so the verifier can classify them.
"""

from __future__ import annotations

from typing import Callable, Dict, Tuple

from .derived import DerivedKind
from .errors import SizeTooSmall
from .indices import IndexReport

K = DerivedKind

F_EXPRESSIONS: Dict[DerivedKind, str] = {
    K.L: "Xi4 + 3*ReZG3 - 6*F - 12*M2 + 12*M1 - 8*m",
    K.S: "F + 8*m",
    K.T1: "8*F + 8*m",
    K.T2: "F + Xi4 + 3*ReZG3",
    K.T: "8*F + Xi4 + 3*ReZG3",
    K.PL: "Xi4",
}

M1_EXPRESSIONS: Dict[DerivedKind, str] = {
    K.L: "F - 4*M1 + 2*M2 + 4*m",
    K.S: "M1 + 4*m",
    K.T1: "4*M1 + 4*m",
    K.T2: "F + M1 + 2*M2",
    K.T: "F + 4*M1 + 2*M2",
    K.PL: "F",
}

FBAR_EXPRESSIONS: Dict[DerivedKind, str] = {
    K.L: "(m+5)*F - 4*(m+2)*M1 + 2*(m+5)*M2 - Xi4 - 3*ReZG3 + 4*m*(m+1)",
    K.S: "(m+n-1)*M1 - F + 4*m*(m+n-3)",
    K.T1: "4*(m+n-1)*M1 - 8*F + 4*m*(m+n-3)",
    K.T2: "(m+n-2)*F + (m+n-1)*M1 + 2*(m+n-1)*M2 - Xi4 - 3*ReZG3",
    K.T: "(m+n-9)*F + 4*(m+n-1)*M1 + 2*(m+n-1)*M2 - Xi4 - 3*ReZG3",
    K.PL: "(2*m-1)*F - Xi4",
}

EXPRESSIONS = {"F": F_EXPRESSIONS, "M1": M1_EXPRESSIONS, "Fbar": FBAR_EXPRESSIONS}


def f_closed(kind, r: IndexReport) -> int:
    kind = DerivedKind(kind)
    n, m, M1, M2, F, Z, X = r.n, r.m, r.M1, r.M2, r.F, r.ReZG3, r.Xi4
    if kind is K.L:
        return X + 3 * Z - 6 * F - 12 * M2 + 12 * M1 - 8 * m
    if kind is K.S:
        return F + 8 * m
    if kind is K.T1:
        return 8 * F + 8 * m
    if kind is K.T2:
        return F + X + 3 * Z
    if kind is K.T:
        return 8 * F + X + 3 * Z
    return X


def m1_closed(kind, r: IndexReport) -> int:
    """M1 of the derived graph.

    T1 and T2 follow the per-vertex degrees (``2d(u)`` in T1, ``d(u)+d(v)``
    on T2 edge-vertices); the printed listing in :data:`PUBLISHED_M1_LISTING`
    has those two lines exchanged.
    """
    kind = DerivedKind(kind)
    m, M1, M2, F = r.m, r.M1, r.M2, r.F
    if kind is K.L:
        return F - 4 * M1 + 2 * M2 + 4 * m
    if kind is K.S:
        return M1 + 4 * m
    if kind is K.T1:
        return 4 * M1 + 4 * m
    if kind is K.T2:
        return F + M1 + 2 * M2
    if kind is K.T:
        return F + 4 * M1 + 2 * M2
    return F


def fbar_closed(kind, r: IndexReport) -> int:
    kind = DerivedKind(kind)
    n, m, M1, M2, F, Z, X = r.n, r.m, r.M1, r.M2, r.F, r.ReZG3, r.Xi4
    if kind is K.L:
        return (m + 5) * F - 4 * (m + 2) * M1 + 2 * (m + 5) * M2 - X - 3 * Z + 4 * m * (m + 1)
    if kind is K.S:
        return (m + n - 1) * M1 - F + 4 * m * (m + n - 3)
    if kind is K.T1:
        return 4 * (m + n - 1) * M1 - 8 * F + 4 * m * (m + n - 3)
    if kind is K.T2:
        return (m + n - 2) * F + (m + n - 1) * M1 + 2 * (m + n - 1) * M2 - X - 3 * Z
    if kind is K.T:
        return (m + n - 9) * F + 4 * (m + n - 1) * M1 + 2 * (m + n - 1) * M2 - X - 3 * Z
    return (2 * m - 1) * F - X


def fbar_identity(n: int, m1: int, f: int) -> int:
    """F-coindex of a simple graph from its order, M1 and F."""
    return (n - 1) * m1 - f


CLOSED = {"F": f_closed, "M1": m1_closed, "Fbar": fbar_closed}


# Printed M1 listing, T1/T2 lines as published.
PUBLISHED_M1_LISTING: Dict[DerivedKind, Tuple[str, Callable[[IndexReport], int]]] = {
    K.L: ("F - 4*M1 + 2*M2 + 4*m", lambda r: r.F - 4 * r.M1 + 2 * r.M2 + 4 * r.m),
    K.S: ("M1 + 4*m", lambda r: r.M1 + 4 * r.m),
    K.T1: ("F + M1 + 2*M2", lambda r: r.F + r.M1 + 2 * r.M2),
    K.T2: ("4*M1 + 4*m", lambda r: 4 * r.M1 + 4 * r.m),
    K.T: ("F + 4*M1 + 2*M2", lambda r: r.F + 4 * r.M1 + 2 * r.M2),
    K.PL: ("F", lambda r: r.F),
}

# (family, invariant) -> kind -> (printed text, formula in n)
PublishedTable = Dict[DerivedKind, Tuple[str, Callable[[int], int]]]

PUBLISHED_EXAMPLES: Dict[Tuple[str, str], PublishedTable] = {
    ("cycle", "F"): {
        K.L: ("8n", lambda n: 8 * n),
        K.S: ("16n", lambda n: 16 * n),
        K.T1: ("72n", lambda n: 72 * n),
        K.T2: ("72n", lambda n: 72 * n),
        K.T: ("128n", lambda n: 128 * n),
        K.PL: ("16n", lambda n: 16 * n),
    },
    ("star", "F"): {
        K.L: ("8n", lambda n: 8 * n),
        K.S: ("(n-1)(n^2-2n+3)", lambda n: (n - 1) * (n**2 - 2 * n + 3)),
        K.T1: ("72n", lambda n: 72 * n),
        K.T2: ("72n", lambda n: 72 * n),
        K.T: ("128n", lambda n: 128 * n),
        K.PL: ("16n", lambda n: 16 * n),
    },
    ("cycle", "Fbar"): {
        K.L: ("4n(n-3)", lambda n: 4 * n * (n - 3)),
        K.S: ("8n(2n-3)", lambda n: 8 * n * (2 * n - 3)),
        K.T1: ("4n(10n-23)", lambda n: 4 * n * (10 * n - 23)),
        K.T2: ("4n(10n-23)", lambda n: 4 * n * (10 * n - 23)),
        K.T: ("32n(2n-5)", lambda n: 32 * n * (2 * n - 5)),
        K.PL: ("8n(2n-3)", lambda n: 8 * n * (2 * n - 3)),
    },
    ("star", "Fbar"): {
        K.L: ("0", lambda n: 0),
        K.S: ("(n-1)(n^2+8n-18)", lambda n: (n - 1) * (n**2 + 8 * n - 18)),
        K.T1: ("16(n-1)(n-2)", lambda n: 16 * (n - 1) * (n - 2)),
        K.T2: ("(n-1)(n^3-n^2-12n-2)", lambda n: (n - 1) * (n**3 - n**2 - 12 * n - 2)),
        K.T: (
            "(n-1)(6n^3-n^4-11n^2+14n-16)",
            lambda n: (n - 1) * (6 * n**3 - n**4 - 11 * n**2 + 14 * n - 16),
        ),
        K.PL: ("(n-1)(n^3-4n^2+7n-6)", lambda n: (n - 1) * (n**3 - 4 * n**2 + 7 * n - 6)),
    },
}

FAMILY_MIN_SIZE = {"cycle": 3, "star": 3}


def example_formulas(family: str, invariant: str, kind, n: int) -> int:
    """Evaluate a published family formula exactly as printed.

    ``invariant`` is ``"F"`` or ``"Fbar"``. Stars start at ``n = 3`` here
    because the printed formulas assume a star with at least two leaves.
    """
    table = PUBLISHED_EXAMPLES[(family, invariant)]
    if n < FAMILY_MIN_SIZE[family]:
        raise SizeTooSmall(f"published {family} formulas need n >= {FAMILY_MIN_SIZE[family]}, got {n}")
    return table[DerivedKind(kind)][1](n)
