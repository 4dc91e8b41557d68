"""Reference data for the 32 braided structures on C2xC2.

Scalars are stored as exponents k of the fourth root of unity i, so
0, 1, 2, 3 stand for 1, i, -1, -i.  The column labels name the quadratic
forms; a label's form is the pointwise product of its generator forms.

One cell of the published quadratic-form census (column BCE2, value at
sigma) is internally inconsistent with the group law and with the
R-matrix census; the value recorded here is the one forced by both.
"""

from __future__ import annotations

PAIR_ORDER = (
    ("sigma", "sigma"),
    ("tau", "tau"),
    ("rho", "rho"),
    ("sigma", "tau"),
    ("tau", "sigma"),
    ("sigma", "rho"),
    ("rho", "sigma"),
    ("tau", "rho"),
    ("rho", "tau"),
)

# generator quadratic forms as (Q(sigma), Q(tau), Q(rho)) exponents of i
QF_GENERATORS = {
    "A": (0, 0, 2),
    "B": (0, 2, 0),
    "C": (2, 0, 0),
    "E1": (1, 1, 0),
    "E2": (1, 0, 1),
    "E3": (0, 1, 1),
}

WORD_LABELS = ("I", "A", "B", "C", "AB", "AC", "BC", "ABC")

QF_LABELS = list(WORD_LABELS) + [
    w + e for e in ("E1", "E2", "E3") for w in ("", "A", "B", "C", "AB", "AC", "BC", "ABC")
]


def label_values(label: str) -> tuple[int, int, int]:
    """Exponent triple (Q(sigma), Q(tau), Q(rho)) of a labelled form."""
    out = [0, 0, 0]
    rest = label
    if rest.endswith(("E1", "E2", "E3")):
        gen = QF_GENERATORS[rest[-2:]]
        out = [(a + b) % 4 for a, b in zip(out, gen)]
        rest = rest[:-2]
    if rest == "I":
        rest = ""
    for ch in rest:
        gen = QF_GENERATORS[ch]
        out = [(a + b) % 4 for a, b in zip(out, gen)]
    return tuple(out)


def _columns(labels, rows):
    """Zip row-major table data into one dict per column label."""
    table = {}
    for idx, label in enumerate(labels):
        table[label] = {pair: rows[r][idx] for r, pair in enumerate(PAIR_ORDER)}
    return table


# The eight R-matrices over the trivial underlying cocycle.
_TRIVIAL_ROWS = [
    # I   A   B   C  AB  AC  BC ABC
    [0, 0, 0, 2, 0, 2, 2, 2],  # R(sigma, sigma)
    [0, 0, 2, 0, 2, 0, 2, 2],  # R(tau, tau)
    [0, 2, 0, 0, 2, 2, 0, 2],  # R(rho, rho)
    [0, 0, 0, 0, 0, 0, 0, 0],  # R(sigma, tau)
    [0, 2, 2, 2, 0, 0, 0, 2],  # R(tau, sigma)
    [0, 0, 0, 2, 0, 2, 2, 2],  # R(sigma, rho)
    [0, 2, 2, 0, 0, 2, 2, 0],  # R(rho, sigma)
    [0, 2, 0, 2, 2, 0, 2, 0],  # R(tau, rho)
    [0, 0, 2, 0, 2, 0, 2, 2],  # R(rho, tau)
]

# The eight R-matrices over the sign cocycle on {sigma, tau}.
_E1_ROWS = [
    # E1 AE1 BE1 CE1 ABE1 ACE1 BCE1 ABCE1
    [1, 1, 1, 3, 1, 3, 3, 3],  # R(sigma, sigma)
    [1, 1, 3, 1, 3, 1, 3, 3],  # R(tau, tau)
    [0, 2, 0, 0, 2, 2, 0, 2],  # R(rho, rho)
    [0, 0, 0, 0, 0, 0, 0, 0],  # R(sigma, tau)
    [2, 0, 0, 0, 2, 2, 2, 0],  # R(tau, sigma)
    [1, 1, 1, 3, 1, 3, 3, 3],  # R(sigma, rho)
    [3, 1, 1, 3, 3, 1, 1, 3],  # R(rho, sigma)
    [3, 1, 3, 1, 1, 3, 1, 3],  # R(tau, rho)
    [1, 1, 3, 1, 3, 1, 3, 3],  # R(rho, tau)
]

# The eight R-matrices over the sign cocycle on {sigma, rho}.
_E2_ROWS = [
    # E2 AE2 BE2 CE2 ABE2 ACE2 BCE2 ABCE2
    [1, 1, 1, 3, 1, 3, 3, 3],  # R(sigma, sigma)
    [0, 0, 2, 0, 2, 0, 2, 2],  # R(tau, tau)
    [1, 3, 1, 1, 3, 3, 1, 3],  # R(rho, rho)
    [0, 0, 0, 0, 0, 0, 0, 0],  # R(sigma, tau)
    [0, 2, 2, 2, 0, 0, 0, 2],  # R(tau, sigma)
    [1, 1, 1, 3, 1, 3, 3, 3],  # R(sigma, rho)
    [1, 3, 3, 1, 1, 3, 3, 1],  # R(rho, sigma)
    [0, 2, 0, 2, 2, 0, 2, 0],  # R(tau, rho)
    [0, 0, 2, 0, 2, 0, 2, 2],  # R(rho, tau)
]

# The eight R-matrices over the sign cocycle on {tau, rho}.
_E3_ROWS = [
    # E3 AE3 BE3 CE3 ABE3 ACE3 BCE3 ABCE3
    [0, 0, 0, 2, 0, 2, 2, 2],  # R(sigma, sigma)
    [1, 1, 3, 1, 3, 1, 3, 3],  # R(tau, tau)
    [1, 3, 1, 1, 3, 3, 1, 3],  # R(rho, rho)
    [0, 0, 0, 0, 0, 0, 0, 0],  # R(sigma, tau)
    [0, 2, 2, 2, 0, 0, 0, 2],  # R(tau, sigma)
    [0, 0, 0, 2, 0, 2, 2, 2],  # R(sigma, rho)
    [0, 2, 2, 0, 0, 2, 2, 0],  # R(rho, sigma)
    [1, 3, 1, 3, 3, 1, 3, 1],  # R(tau, rho)
    [1, 1, 3, 1, 3, 1, 3, 3],  # R(rho, tau)
]

BRAIDING_TABLES = {
    frozenset(): _columns(WORD_LABELS, _TRIVIAL_ROWS),
    frozenset({"sigma", "tau"}): _columns([w + "E1" for w in ("",) + WORD_LABELS[1:]], _E1_ROWS),
    frozenset({"sigma", "rho"}): _columns([w + "E2" for w in ("",) + WORD_LABELS[1:]], _E2_ROWS),
    frozenset({"tau", "rho"}): _columns([w + "E3" for w in ("",) + WORD_LABELS[1:]], _E3_ROWS),
}

# relations satisfied by the labelled quadratic forms under pointwise product
QF_RELATIONS = [
    (("E1", "E1"), "BC"),
    (("E2", "E2"), "AC"),
    (("E3", "E3"), "AB"),
    (("E1", "E2"), "CE3"),
    (("E1", "E3"), "BE2"),
    (("E2", "E3"), "AE1"),
    (("A", "A"), "I"),
    (("B", "B"), "I"),
    (("C", "C"), "I"),
]

SYMMETRIC_LABELS = {"I", "AB", "AC", "BC"}
