"""Expected forms of the constructed objects, used as verification oracles.

Everything here is data: canonical text for the map components, the explicit
field actions, the auxiliary polynomials and the full commutator tables per
genus.  Constructions elsewhere are derived from the defining formulas; the
verifier diffs them against these tables, so a slip on either side surfaces
as a reported mismatch.

Coefficient strings may mention generator variables, parameters, the symbols
l4, l6, ... (resolved through the polynomial map) and the auxiliary symbols
w6..w15, p7..p11 (resolved through their defining expressions).
"""

from __future__ import annotations

from fractions import Fraction

# -- polynomial map components and w-expressions ------------------------------

MAP = {
    1: {
        "l4": "-3*x2^2 + 1/2*x4",
        "l6": "2*x2^3 + 1/4*x3^2 - 1/2*x2*x4",
    },
    2: {
        "l4": "-3*x2^2 + 1/2*x4 - 2*y4",
        "l6": "2*x2^3 + 1/4*x3^2 - 1/2*x2*x4 - 2*x2*y4 + 1/2*y6",
        "l8": "(4*x2^2 + y4)*y4 - 1/2*(x4*y4 - x3*y5 + x2*y6)",
        "l10": "2*x2*y4^2 + 1/4*y5^2 - 1/2*y4*y6",
    },
    3: {
        "l4": "-3*x2^2 + 1/2*x4 - 2*y4",
        "l6": "2*x2^3 + 1/4*x3^2 - 1/2*x2*x4 - 2*x2*y4 + 1/2*y6 - 2*z6",
        "l8": "4*x2^2*y4 - 1/2*(x4*y4 - x3*y5 + x2*y6) + y4^2 - 2*x2*z6 + 1/2*z8",
        "l10": "2*x2*y4^2 + 1/4*y5^2 - 1/2*y4*y6 - 1/2*(x4*z6 - x3*z7 + x2*z8)"
        " + (4*x2^2 + 2*y4)*z6",
        "l12": "4*x2*y4*z6 - 1/2*(y6*z6 - y5*z7 + y4*z8) + z6^2",
        "l14": "2*x2*z6^2 + 1/4*z7^2 - 1/2*z6*z8",
    },
}

W_EXPRS = {
    2: {(3, 3): "3*x2*y4 - 1/2*y6"},
    3: {
        (3, 3): "3*x2*y4 - 1/2*y6 + 3*z6",
        (3, 5): "3*x2*z6 - 1/2*z8",
        (5, 5): "1/2*(x4*z6 - x3*z7 + x2*z8) - (4*x2^2 + y4)*z6",
    },
}

# -- auxiliary polynomials -----------------------------------------------------

# name -> (weight, expected text)
AUX = {
    2: {
        "w6": "3*x2*y4 - 1/2*y6",
        "p7": "x3*y4 - x2*y5",
        "w9": "-x2*x3*y4 + x2^2*y5 - 1/2*(x4*y5 - x3*y6) + y4*y5",
    },
    3: {
        "w6": "3*x2*y4 - 1/2*y6 + 3*z6",
        "w8": "3*x2*z6 - 1/2*z8",
        "w10": "1/2*(x4*z6 - x3*z7 + x2*z8) - (4*x2^2 + y4)*z6",
        "p7": "x3*y4 - x2*y5 + z7",
        "p9": "x3*z6 - x2*z7",
        "p11": "y5*z6 - y4*z7",
        "w9": "-x3*x2*y4 + x2^2*y5 - 1/2*x4*y5 + 1/2*x3*y6 + y4*y5 + x3*z6"
        " - 2*x2*z7",
        "w11": "-x2*x3*z6 + y5*z6 + x2^2*z7 - 1/2*x4*z7 + 1/2*x3*z8",
        "w13": "-y5*x2*z6 + x2*y4*z7 - 1/2*y6*z7 + 1/2*y5*z8 + z6*z7",
        "w15": "-y4*y5*z6 + y4^2*z7 + x3*z6^2 - x2*z6*z7 - 1/2*z7*z8"
        " + 1/2*z8*p7 - 1/2*y6*p9 + 1/2*x4*p11",
    },
}

# Alternate definitions every auxiliary polynomial must satisfy:
# (name, field, argument aux name or variable).
AUX_DEFS = {
    2: [
        ("p7", "L1", "w6"),
        ("p7", "L3", "y4"),
        ("w9", "L3", "w6"),
    ],
    3: [
        ("p7", "L1", "w6"),
        ("p7", "L3", "y4"),
        ("p9", "L1", "w8"),
        ("p9", "L3", "z6"),
        ("p9", "L5", "y4"),
        ("p11", "L1", "w10"),
        ("p11", "L5", "z6"),
        ("w9", "L3", "w6"),
        ("w11", "L5", "w6"),
        ("w11", "L3", "w8"),
        ("w13", "L5", "w8"),
        ("w13", "L3", "w10"),
        ("w15", "L5", "w10"),
    ],
}

# -- explicit field actions ----------------------------------------------------

# Genus 1: full 3x3 action grid.
FIELD_ACTIONS = {
    1: {
        "L0": {"x2": "2*x2", "x3": "3*x3", "x4": "4*x4"},
        "L1": {"x2": "x3", "x3": "x4", "x4": "12*x2*x3"},
        "L2": {
            "x2": "2/3*x4 - 2*x2^2",
            "x3": "3*x2*x3",
            "x4": "2*x2*x4 + 3*x3^2",
        },
    },
    2: {
        "L1": {
            "x2": "x3",
            "x3": "x4",
            "x4": "4*(3*x2*x3 + y5)",
            "y4": "y5",
            "y5": "y6",
            "y6": "4*(2*x2*y5 + x3*y4)",
        },
        "L3": {
            "x2": "y5",
            "x3": "y6",
            "x4": "4*(2*x2*y5 + x3*y4)",
            "y4": "x3*y4 - x2*y5",
            "y5": "x4*y4 - x2*y6",
            "y6": "8*x2*x3*y4 - 8*x2^2*y5 + x4*y5 - x3*y6 + 4*y4*y5",
        },
        "L2": {
            "x2": "8/5*l4 + 2*x2^2 + 4*y4",
            "x3": "3*x2*x3 + 5*y5",
            "x4": "2*x2*x4 + 3*x3^2 + 6*y6",
            "y4": "-4/5*l4*x2 + 2*x2*y4",
            "y5": "-4/5*l4*x3 + 3*x3*y4",
            "y6": "-4/5*l4*x4 + 4*x4*y4 + 3*x3*y5 - 2*x2*y6",
        },
        "L4": {
            "x2": "2/5*l6 - 2*x2*y4 + y6",
            "x3": "x3*y4 + 5*x2*y5",
            "x4": "6*x3*y5 + 4*x2*y6",
            "y4": "-6/5*l6*x2 + 2*l4*y4 - 4*x2^2*y4 + x4*y4 - 1/2*x3*y5",
            "y5": "-6/5*l6*x3 + 2*l4*y5 + 2*x2*x3*y4 - 2*x2^2*y5 + 4*y4*y5 - w9",
            "y6": "-6/5*l6*x4 + 2*l4*y6 + x3^2*y4 + 2*x2*x4*y4 - x2*x3*y5"
            " - 2*x2^2*y6 + 5*y5^2 + 2*y4*y6",
        },
        "L6": {
            "x2": "1/5*l8 + 1/2*(x4*y4 - x2*y6) - y4^2",
            "x3": "3*x2*p7 - w9",
            "x4": "2*x3^2*y4 + 4*x2*x4*y4 - 2*x2*x3*y5 - 4*x2^2*y6 + y5^2"
            " - 2*y4*y6",
            "y4": "-8/5*l8*x2 + 2*l6*y4 - 2*x2*y4^2 - y5^2 + y4*y6",
            "y5": "-8/5*l8*x3 + 2*l6*y5 + x3*y4^2 + 5*x2*y4*y5 - y5*y6",
            "y6": "-8/5*l8*x4 + 2*l6*y6 + 3*x3*y4*y5 - 3*x2*y5^2 + 6*x2*y4*y6"
            " - y6^2",
        },
    },
    3: {
        "L1": {
            "x2": "x3",
            "x3": "x4",
            "x4": "4*(3*x2*x3 + y5)",
            "y4": "y5",
            "y5": "y6",
            "y6": "4*(x3*y4 + 2*x2*y5 + z7)",
            "z6": "z7",
            "z7": "z8",
            "z8": "4*(x3*z6 + 2*x2*z7)",
        },
        # Displayed values of the odd fields on the depth-1 variables.
        "L3": {
            "x2": "y5",
            "y4": "x3*y4 - x2*y5 + z7",
            "z6": "x3*z6 - x2*z7",
        },
        "L5": {
            "x2": "z7",
            "y4": "x3*z6 - x2*z7",
            "z6": "y5*z6 - y4*z7",
        },
    },
}

# Genus-3 even-field seed values on (x2, y4, z6); everything else follows by
# ladder completion under the depth-1 commutator table below.
EVEN_SEEDS_G3 = {
    "L2": {
        "x2": "12/7*l4 + 2*x2^2 + 4*y4",
        "y4": "-8/7*l4*x2 + 2*x2*y4 + 6*z6",
        "z6": "-4/7*l4*y4 + 2*x2*z6",
    },
    "L4": {
        "x2": "4/7*l6 - 2*x2*y4 + y6 + 2*z6",
        "y4": "-12/7*l6*x2 - 10*x2^2*y4 + 2*x4*y4 - 4*y4^2 - 1/2*x3*y5 + 2*x2*z6",
        "z6": "-6/7*l6*y4 - 16*x2^2*z6 + 3*x4*z6 - 8*y4*z6 - 1/2*x3*z7",
    },
    "L6": {
        "x2": "-4/7*l8 + 4*x2^2*y4 - x2*y6 - 4*x2*z6 + 1/2*x3*y5 + 2*z8",
        "y4": "-16/7*l8*x2 + 2*l6*y4 - 2*x2*y4^2 - y5^2 + y4*y6 - 16*x2^2*z6"
        " + 3*x4*z6 - 6*y4*z6 - 1/2*x3*z7",
        "z6": "-8/7*l8*y4 + 4*l6*z6 - 2*x2*y4*z6 + y6*z6 - y5*z7 + 2*z6^2",
    },
    "L8": {
        "x2": "2/7*l10 + x4*z6 - 2*y4*z6 - x2*z8",
        "y4": "-6/7*l10*x2 + x3^2*z6 - x2*x4*z6 - 18*x2*y4*z6 + 3*y6*z6"
        " - x2*x3*z7 - 5/2*y5*z7 + x2^2*z8 + 2*y4*z8 - 6*z6^2",
        "z6": "-10/7*l10*y4 - x4*y4*z6 + 3/2*x3*y5*z6 + 2*y4^2*z6 - 20*x2*z6^2"
        " - z7^2 + 3*z6*z8 + 4*w6*x2*z6 - 1/2*z7*p7",
    },
    "L10": {
        "x2": "1/7*l12 + 1/2*y6*z6 - 1/2*y4*z8 - z6^2",
        "y4": "-3/7*l12*x2 + 1/2*x3*y5*z6 - 1/2*x2*y6*z6 - 1/2*x3*y4*z7"
        " + 1/2*x2*y4*z8 - 11*x2*z6^2 - 3/2*z7^2 + 3*z6*z8",
        "z6": "2/7*l12*y4 - 4*x2*y4^2*z6 + 1/2*y5^2*z6 - y4*y5*z7 + y4^2*z8"
        " + 8*x2^2*z6^2 + x2*z7^2 - 2*x2*z6*z8",
    },
}

# Genus-2 hatted combinations: catalog field = base + listed extra terms.
HATTED_G2 = {
    "L2": [],
    "L4": [("alpha*x3", "L1")],
    "L6": [("beta*x3", "L3"), ("gamma1*y5 + gamma2*x2*x3", "L1")],
}

# -- commutator tables ---------------------------------------------------------

# Rows: (left, right, {field: coefficient text}).  A missing dict means the
# bracket is zero.  Euler rows [L0, Lk] = k Lk are generated programmatically.

BRACKET_TABLE = {
    1: [
        ("L1", "L2", {"L1": "x2"}),
    ],
    2: [
        ("L1", "L3", {}),
        ("L1", "L2", {"L1": "x2", "L3": "-1"}),
        ("L1", "L4", {"L1": "y4 + alpha*x4", "L3": "x2"}),
        ("L1", "L6", {
            "L1": "gamma2*(x3^2 + x2*x4) + gamma1*y6",
            "L3": "y4 + beta*x4",
        }),
        ("L3", "L2", {"L1": "y4 + 4/5*l4"}),
        ("L3", "L4", {"L1": "w6 + 6/5*l6 + alpha*y6", "L3": "y4 - l4"}),
        ("L3", "L6", {
            "L1": "3/5*l8 + gamma1*x4*y4 + gamma2*x3*y5 - (gamma1 - gamma2)*x2*y6",
            "L3": "w6 + beta*y6",
        }),
        ("L2", "L4", {
            "L0": "8/5*l6",
            "L2": "-8/5*l4",
            "L6": "2",
            "L1": "-1/2*y5 + 2*(alpha - gamma2)*x2*x3 + (5*alpha - 2*gamma1)*y5",
            "L3": "1/2*x3 + (alpha - 2*beta)*x3",
        }),
        ("L2", "L6", {
            "L0": "4/5*l8",
            "L4": "-4/5*l4",
            "L1": "-1/2*p7"
            " + 1/5*(2*(alpha - beta - gamma1)*(x4 - 6*x2^2)"
            " + 4*gamma2*(x4 - x2^2 + y4)"
            " - (8*alpha - 3*beta - 23*gamma1)*y4)*x3"
            " - (gamma1 - 5*gamma2)*x2*y5",
            "L3": "1/2*y5 + (5*beta + gamma1)*y5 + (3*beta + gamma2)*x2*x3",
        }),
        ("L4", "L6", {
            "L0": "-2*l10",
            "L2": "6/5*l8",
            "L4": "-6/5*l6",
            "L6": "2*l4",
            "L1": "-1/2*w9"
            " + (alpha - beta - gamma1 + 2*gamma2)*(6/5*l6 + w6 + y6)*x3"
            " + (2*gamma2*x2^3 - 1/2*gamma2*x3^2 + (6*gamma1 - 7*alpha)*x2*y4"
            " + (beta - gamma2)*y6)*x3"
            " + ((4*alpha - 3*gamma1 + 5*gamma2)*x2^2 - 1/2*(alpha - gamma1)*x4"
            " + (alpha + 2*gamma1)*y4)*y5"
            " + alpha*(gamma2*x3^3 - gamma1*x4*y5 - (beta - gamma1)*x3*y6)",
            "L3": "1/2*p7 + (3*beta - gamma2)*x2^2*x3"
            " + 1/2*beta*(2*alpha - 1)*x3*x4 + (alpha + 2*beta)*x3*y4"
            " + (5*beta - gamma1)*x2*y5",
        }),
    ],
    3: [
        ("L1", "L3", {}),
        ("L1", "L5", {}),
        ("L3", "L5", {}),
        # depth-1 rows (the ladder constraint)
        ("L1", "L0", {"L1": "-1"}),
        ("L1", "L2", {"L1": "x2", "L3": "-1"}),
        ("L1", "L4", {"L1": "y4", "L3": "x2", "L5": "-1"}),
        ("L1", "L6", {"L1": "z6", "L3": "y4", "L5": "x2"}),
        ("L1", "L8", {"L3": "z6", "L5": "y4"}),
        ("L1", "L10", {"L5": "z6"}),
        # depth-3 rows
        ("L3", "L2", {"L1": "y4 - l4 + 3/7*5*l4", "L5": "-3"}),
        ("L3", "L4", {"L1": "w6 + 3/7*4*l6", "L3": "y4 - l4"}),
        ("L3", "L6", {"L1": "w8 + 3/7*3*l8", "L3": "w6", "L5": "y4 - l4"}),
        ("L3", "L8", {"L1": "3/7*2*l10", "L3": "w8", "L5": "w6"}),
        ("L3", "L10", {"L1": "3/7*l12", "L5": "w8"}),
        # depth-5 rows
        ("L5", "L2", {"L1": "z6", "L3": "2/7*2*l4"}),
        ("L5", "L4", {"L1": "w8", "L3": "z6 + 2/7*3*l6", "L5": "-3*l4"}),
        ("L5", "L6", {"L1": "w10", "L3": "w8 + 2/7*4*l8", "L5": "z6 - 2*l6"}),
        ("L5", "L8", {"L1": "-l12", "L3": "w10 + 2/7*5*l10", "L5": "w8 - l8"}),
        ("L5", "L10", {"L1": "-2*l14", "L3": "-l12 + 2/7*6*l12", "L5": "w10"}),
        # even-even rows: structure-matrix part plus odd-field corrections
        ("L2", "L4", {
            "L0": "2/7*8*l6", "L2": "-2/7*8*l4", "L6": "2",
            "L1": "-1/2*y5", "L3": "1/2*x3",
        }),
        ("L2", "L6", {
            "L0": "2/7*6*l8", "L4": "-2/7*6*l4", "L8": "4",
            "L1": "-1/2*(p7 + z7)", "L3": "1/2*y5", "L5": "1/2*x3",
        }),
        ("L2", "L8", {
            "L0": "2/7*4*l10", "L6": "-2/7*4*l4", "L10": "6",
            "L1": "-p9", "L3": "1/2*z7", "L5": "1/2*y5",
        }),
        ("L2", "L10", {
            "L0": "2/7*2*l12", "L8": "-2/7*2*l4",
            "L1": "-1/2*p11", "L5": "1/2*z7",
        }),
        ("L4", "L6", {
            "L0": "-2*l10", "L2": "2/7*9*l8", "L4": "-2/7*9*l6",
            "L6": "2*l4", "L10": "2",
            "L1": "-1/2*w9", "L3": "1/2*(p7 - 2*z7)", "L5": "y5",
        }),
        ("L4", "L8", {
            "L0": "-4*l12", "L2": "2/7*6*l10", "L6": "-2/7*6*l6", "L8": "4*l4",
            "L1": "-w11", "L5": "p7",
        }),
        ("L4", "L10", {
            "L0": "-6*l14", "L2": "2/7*3*l12", "L8": "-2/7*3*l6", "L10": "6*l4",
            "L1": "-1/2*w13", "L3": "-1/2*p11", "L5": "p9",
        }),
        ("L6", "L8", {
            "L0": "-2*l14", "L2": "-2*l12", "L4": "2/7*8*l10",
            "L6": "-2/7*8*l8", "L8": "2*l6", "L10": "2*l4",
            "L1": "-w13", "L3": "p11 - 1/2*w11", "L5": "1/2*w9",
        }),
        ("L6", "L10", {
            "L2": "-4*l14", "L4": "2/7*4*l12", "L8": "-2/7*4*l8", "L10": "4*l6",
            "L1": "-1/2*w15", "L3": "-1/2*w13", "L5": "1/2*(w11 + p11)",
        }),
        ("L8", "L10", {
            "L4": "-2*l14", "L6": "2/7*5*l12", "L8": "-2/7*5*l10", "L10": "2*l8",
            "L3": "-1/2*w15", "L5": "1/2*w13",
        }),
    ],
}

# Genus-2 normalization: the depth-1 commutators the catalog must realise
# after the parameters are fixed.
G2_NORMALIZATION = [
    ("L1", "L0", {"L1": "-1"}),
    ("L1", "L2", {"L1": "x2", "L3": "-1"}),
    ("L1", "L4", {"L1": "y4", "L3": "x2"}),
    ("L1", "L6", {"L3": "y4"}),
]

# -- classical-notation tables -------------------------------------------------

# Symbols: P{i} and P{i}_{indices} translate through the symbol dictionary;
# l-symbols translate through the polynomial map.

CLASSICAL_TABLE = {
    1: [
        ("L1", "L2", {"L1": "P2"}),
    ],
    2: [
        ("L1", "L3", {}),
        ("L1", "L2", {"L1": "P2", "L3": "-1"}),
        ("L1", "L4", {"L1": "P1_3", "L3": "P2"}),
        ("L1", "L6", {"L3": "P1_3"}),
        ("L3", "L2", {"L1": "P1_3 + 4/5*l4"}),
        ("L3", "L4", {"L1": "P0_33 + 6/5*l6", "L3": "P1_3 - l4"}),
        ("L3", "L6", {"L1": "3/5*l8", "L3": "P0_33"}),
        ("L2", "L4", {
            "L0": "8/5*l6", "L2": "-8/5*l4", "L6": "2",
            "L1": "-1/2*P2_3", "L3": "1/2*P3",
        }),
        ("L2", "L6", {
            "L0": "4/5*l8", "L4": "-4/5*l4",
            "L1": "-1/2*P1_33", "L3": "1/2*P2_3",
        }),
        ("L4", "L6", {
            "L0": "-2*l10", "L2": "6/5*l8", "L4": "-6/5*l6", "L6": "2*l4",
            "L1": "-1/2*P0_333", "L3": "1/2*P1_33",
        }),
    ],
    3: [
        ("L1", "L3", {}),
        ("L1", "L5", {}),
        ("L3", "L5", {}),
        ("L1", "L2", {"L1": "P2", "L3": "-1"}),
        ("L1", "L4", {"L1": "P1_3", "L3": "P2", "L5": "-1"}),
        ("L1", "L6", {"L1": "P1_5", "L3": "P1_3", "L5": "P2"}),
        ("L1", "L8", {"L3": "P1_5", "L5": "P1_3"}),
        ("L1", "L10", {"L5": "P1_5"}),
        ("L3", "L2", {"L1": "P1_3 - l4 + 3/7*5*l4", "L5": "-3"}),
        ("L3", "L4", {"L1": "P0_33 + 3/7*4*l6", "L3": "P1_3 - l4"}),
        ("L3", "L6", {"L1": "P0_35 + 3/7*3*l8", "L3": "P0_33", "L5": "P1_3 - l4"}),
        ("L3", "L8", {"L1": "3/7*2*l10", "L3": "P0_35", "L5": "P0_33"}),
        ("L3", "L10", {"L1": "3/7*l12", "L5": "P0_35"}),
        ("L5", "L2", {"L1": "P1_5", "L3": "2/7*2*l4"}),
        ("L5", "L4", {"L1": "P0_35", "L3": "P1_5 + 2/7*3*l6", "L5": "-3*l4"}),
        ("L5", "L6", {"L1": "P0_55", "L3": "P0_35 + 2/7*4*l8", "L5": "P1_5 - 2*l6"}),
        ("L5", "L8", {"L1": "-l12", "L3": "P0_55 + 2/7*5*l10", "L5": "P0_35 - l8"}),
        ("L5", "L10", {"L1": "-2*l14", "L3": "-l12 + 2/7*6*l12", "L5": "P0_55"}),
        ("L2", "L4", {
            "L0": "2/7*8*l6", "L2": "-2/7*8*l4", "L6": "2",
            "L1": "-1/2*P2_3", "L3": "1/2*P3",
        }),
        ("L2", "L6", {
            "L0": "2/7*6*l8", "L4": "-2/7*6*l4", "L8": "4",
            "L1": "-1/2*(P1_33 + P2_5)", "L3": "1/2*P2_3", "L5": "1/2*P3",
        }),
        ("L2", "L8", {
            "L0": "2/7*4*l10", "L6": "-2/7*4*l4", "L10": "6",
            "L1": "-P1_35", "L3": "1/2*P2_5", "L5": "1/2*P2_3",
        }),
        ("L2", "L10", {
            "L0": "2/7*2*l12", "L8": "-2/7*2*l4",
            "L1": "-1/2*P1_55", "L5": "1/2*P2_5",
        }),
        ("L4", "L6", {
            "L0": "-2*l10", "L2": "2/7*9*l8", "L4": "-2/7*9*l6",
            "L6": "2*l4", "L10": "2",
            "L1": "-1/2*P0_333", "L3": "1/2*(P1_33 - 2*P2_5)", "L5": "P2_3",
        }),
        ("L4", "L8", {
            "L0": "-4*l12", "L2": "2/7*6*l10", "L6": "-2/7*6*l6", "L8": "4*l4",
            "L1": "-P0_335", "L5": "P1_33",
        }),
        ("L4", "L10", {
            "L0": "-6*l14", "L2": "2/7*3*l12", "L8": "-2/7*3*l6", "L10": "6*l4",
            "L1": "-1/2*P0_355", "L3": "-1/2*P1_55", "L5": "P1_35",
        }),
        ("L6", "L8", {
            "L0": "-2*l14", "L2": "-2*l12", "L4": "2/7*8*l10",
            "L6": "-2/7*8*l8", "L8": "2*l6", "L10": "2*l4",
            "L1": "-P0_355", "L3": "P1_55 - 1/2*P0_335", "L5": "1/2*P0_333",
        }),
        ("L6", "L10", {
            "L2": "-4*l14", "L4": "2/7*4*l12", "L8": "-2/7*4*l8", "L10": "4*l6",
            "L1": "-1/2*P0_555", "L3": "-1/2*P0_355", "L5": "1/2*(P0_335 + P1_55)",
        }),
        ("L8", "L10", {
            "L4": "-2*l14", "L6": "2/7*5*l12", "L8": "-2/7*5*l10", "L10": "2*l8",
            "L3": "-1/2*P0_555", "L5": "1/2*P0_355",
        }),
    ],
}

# -- parameter-space matrices (displayed form) ---------------------------------

T_MATRIX = {
    1: [
        ["4*l4", "6*l6"],
        ["6*l6", "-4/3*l4^2"],
    ],
    2: [
        ["4*l4", "6*l6", "8*l8", "10*l10"],
        ["6*l6", "8*l8 - 12/5*l4^2", "10*l10 - 8/5*l4*l6", "-4/5*l4*l8"],
        ["8*l8", "10*l10 - 8/5*l4*l6", "4*l4*l8 - 12/5*l6^2",
         "6*l4*l10 - 6/5*l6*l8"],
        ["10*l10", "-4/5*l4*l8", "6*l4*l10 - 6/5*l6*l8",
         "4*l6*l10 - 8/5*l8^2"],
    ],
    3: [
        ["4*l4", "6*l6", "8*l8", "10*l10", "12*l12", "14*l14"],
        ["6*l6", "8*l8 - 20/7*l4^2", "10*l10 - 16/7*l4*l6",
         "12*l12 - 12/7*l4*l8", "14*l14 - 8/7*l4*l10", "-4/7*l4*l12"],
        ["8*l8", "10*l10 - 16/7*l4*l6", "12*l12 + 4*l4*l8 - 24/7*l6^2",
         "14*l14 + 6*l4*l10 - 18/7*l6*l8", "8*l4*l12 - 12/7*l6*l10",
         "10*l4*l14 - 6/7*l6*l12"],
        ["10*l10", "12*l12 - 12/7*l4*l8", "14*l14 + 6*l4*l10 - 18/7*l6*l8",
         "4*l6*l10 + 8*l4*l12 - 24/7*l8^2",
         "6*l6*l12 + 10*l4*l14 - 16/7*l8*l10", "8*l6*l14 - 8/7*l8*l12"],
        ["12*l12", "14*l14 - 8/7*l4*l10", "8*l4*l12 - 12/7*l6*l10",
         "6*l6*l12 + 10*l4*l14 - 16/7*l8*l10",
         "4*l8*l12 + 8*l6*l14 - 20/7*l10^2", "6*l8*l14 - 10/7*l10*l12"],
        ["14*l14", "-4/7*l4*l12", "10*l4*l14 - 6/7*l6*l12",
         "8*l6*l14 - 8/7*l8*l12", "6*l8*l14 - 10/7*l10*l12",
         "4*l10*l14 - 12/7*l12^2"],
    ],
}

# -- frozen constants -----------------------------------------------------------

# det T = c * R.  The genus-2 value is not displayed anywhere; it is derived
# once by exact division and frozen here.
DETT_R_CONSTANT = {
    1: Fraction(-4, 3),
    2: Fraction(16, 5),  # derived
    3: Fraction(-64, 7),
}

# L_k(det T) = m_k det T, fields in ascending weight order.  The genus-2
# multipliers are derived; genus 1 and 3 are displayed values.
TANGENCY_MULTIPLIERS = {
    1: ["12", "0"],
    2: ["40", "0", "12*l4", "4*l6"],  # derived
    3: ["84", "0", "40*l4", "24*l6", "12*l8", "4*l10"],
}

# det of the 3g x 3g action matrix of the lifted fields (rows in ascending
# field weight, columns in ring order) against det T pulled back through p.
DET_TCAL_FACTOR = {1: 4, 2: -16, 3: -64}

# Weight of the discriminant resultant under the parameter grading.
def r_weight(genus: int) -> int:
    return 4 * genus * (2 * genus + 1)
