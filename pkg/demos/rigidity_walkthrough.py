"""The rigidity gate on degree-1 del Pezzo fibration pairs, end to end.

The criterion: with the structural assumptions asserted on both sides, a
birational map between the fibrations is biregular once

    tlct(S_X) + tlct(S_Y) > 1.

The walkthrough hits the sharp boundary (sum exactly 1), enumerates the
admissible partner classes for sources of decreasing threshold, and
inverts the constraint to see what a target forces on its source.
"""

from fractions import Fraction

from delpezzo1 import (
    FibrationSpec,
    SurfaceSpec,
    possible_targets,
    rigidity_gate,
    source_constraints,
    target_class_for,
    tlct,
)


def show_gate(x_labels, x_cusp, y_labels, y_cusp):
    x = FibrationSpec(SurfaceSpec(x_labels, x_cusp))
    y = FibrationSpec(SurfaceSpec(y_labels, y_cusp))
    verdict = rigidity_gate(x, y)
    print(f"  {x.fiber} vs {y.fiber}:  {verdict.outcome}, sum {verdict.tlct_sum}")
    return verdict


def main():
    print("gate verdicts:")
    show_gate(["A5"], "none", ["E8"], "none")          # 1 + 1/6 > 1: rigid
    show_gate([], "smooth", ["E8"], "none")            # 5/6 + 1/6 = 1: sharp
    show_gate(["E8"], "none", ["E8"], "none")          # 1/3: far from rigid

    print("\nadmissible partner classes by source threshold:")
    for labels, cusp in (
        (["A4"], "none"),
        (["A4"], "smooth"),
        (["A1", "A2"], "A1"),
        (["A2"], "A2"),
    ):
        fiber = SurfaceSpec(labels, cusp)
        classes = possible_targets(FibrationSpec(fiber))
        t = tlct(fiber).value
        print(f"  source {fiber} (tlct {t}):")
        if not classes:
            print("    none - every birational map is biregular")
        for cls in classes:
            print(f"    {cls.tlct_value}: {cls.description}")

    print("\nwhat a target forces on an An-only source:")
    for value in (Fraction(1, 3), Fraction(1, 4)):
        cls = target_class_for(value)
        needs = source_constraints(cls)
        print(f"  target '{cls.description}' needs cusp at {' or '.join(needs)}")


if __name__ == "__main__":
    main()
