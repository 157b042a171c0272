"""Walk every Du Val type: intersection matrix, fundamental cycle, attachment.

The fundamental cycle Z of a rational double point is the smallest positive
divisor supported on the exceptional curves with Z.E_j <= 0 for all j; the
attachment numbers d_j = D~.E_j say how the strict transform of an
anticanonical member hangs onto the exceptional locus.  Two identities tie
the picture together: Z^2 = -2 and sum_j a_j d_j = 2.
"""

from delpezzo1 import (
    ALL_TYPES,
    attachment_vector,
    fundamental_cycle,
    intersection_matrix,
    is_negative_definite,
)


def main():
    for t in ALL_TYPES:
        m = intersection_matrix(t)
        cycle = fundamental_cycle(t)
        attach = attachment_vector(t)
        a, d = cycle.coeffs, attach.d

        z_squared = sum(
            a[i] * a[j] * m[i, j] for i in range(m.n) for j in range(m.n)
        )
        pairing = sum(x * y for x, y in zip(a, d))

        print(f"{t.label:>2}:  a = {' '.join(map(str, a))}")
        print(f"     d = {' '.join(map(str, d))}")
        print(f"     negative definite: {is_negative_definite(m)},"
              f"  Z^2 = {z_squared},  a.d = {pairing}")
        assert z_squared == -2 and pairing == 2
    print("\nall", len(ALL_TYPES), "types check out")


if __name__ == "__main__":
    main()
