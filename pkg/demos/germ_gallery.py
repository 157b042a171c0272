"""A gallery of plane curve germs: classification, thresholds, blowup trees.

Every germ below sits at the origin with exact rational coefficients.  For
each one we print its multiplicity, the smooth/node/cusp/other verdict,
the log canonical threshold from the blowup engine, and — when the germ is
quasi-homogeneous — the closed form min(1, (w_x + w_y)/d) as a cross-check.
"""

from delpezzo1 import (
    CurveGerm,
    NotQuasihomogeneousError,
    classify_germ,
    germ_blowup_tree,
    lct_germ,
    lct_quasihomogeneous,
)

GALLERY = [
    "x",                       # smooth branch
    "x*y",                     # node: two transverse branches
    "y^2 - x^3",               # ordinary cusp
    "y*(y - x^2)",             # tacnode: two branches with contact 2
    "x*y*(x + y)",             # ordinary triple point
    "y^2 - x^5",               # higher cusp
    "y^2 - x^9",
    "y^3 - x^4",
    "y^3 - x^5",
    "y^2 - 2*x^6",             # branches conjugate over Q(sqrt 2)
    "(y^2 - 2*x^2)^2 - x^6",   # four branches in two Galois orbits
]


def describe(node, depth=0):
    print("      " + "  " * depth + f"E: k={node.k} m={node.m} ratio={node.ratio}")
    for child in node.children:
        describe(child, depth + 1)


def main():
    for text in GALLERY:
        germ = CurveGerm(text)
        kind = classify_germ(germ)
        value = lct_germ(germ)
        line = f"{text:>24}:  mult {germ.multiplicity}, {kind:<6} lct = {value}"
        try:
            line += f"   (quasi-homogeneous form: {lct_quasihomogeneous(germ)})"
        except NotQuasihomogeneousError:
            pass
        print(line)
        for root in germ_blowup_tree(germ):
            describe(root)


if __name__ == "__main__":
    main()
