"""Independent Cartesian oracles used by the kernel tests.

The embedding realizes a tetrahedron from its squared edge lengths with
interval coordinates (outward-rounded square roots), so oracle values are
rigorous enclosures that exact kernel results must fall inside.
"""

from tetrascreen import scalar as S
from tetrascreen._backend import Q


def embed_tetra(metric, bits=128):
    """Interval Cartesian coordinates of the four vertices: A1 at the
    origin, A2 on the x-axis, A3 in the xy-plane, A4 above."""
    sq = {(i, j): metric.sq(i, j) for i in range(1, 5) for j in range(i + 1, 5)}
    zero = Q(0)
    a1 = (zero, zero, zero)
    d12 = S.sqrt(sq[(1, 2)], bits)
    a2 = (d12, zero, zero)
    x3 = S.div(sq[(1, 3)] + sq[(1, 2)] - sq[(2, 3)], 2 * d12)
    y3 = S.sqrt(sq[(1, 3)] - x3 * x3, bits)
    a3 = (x3, y3, zero)
    x4 = S.div(sq[(1, 4)] + sq[(1, 2)] - sq[(2, 4)], 2 * d12)
    y4 = S.div(sq[(1, 4)] - 2 * x4 * x3 + x3 * x3 + y3 * y3 - sq[(3, 4)], 2 * y3)
    z4sq = sq[(1, 4)] - x4 * x4 - y4 * y4
    if isinstance(z4sq, S.Interval) and z4sq.lo < 0:
        z4sq = S.Interval(Q(0), z4sq.hi, z4sq.bits, _rounded=True)
    z4 = S.sqrt(z4sq, bits)
    a4 = (x4, y4, z4)
    return (a1, a2, a3, a4)


def cartesian_of(point, vertices):
    """Affine combination of the embedded vertices by the normalized
    tetra coordinates."""
    coords = point.normalized().tuple()
    out = []
    for axis in range(3):
        total = Q(0)
        for k in range(4):
            total = total + coords[k] * vertices[k][axis]
        out.append(total)
    return tuple(out)


def sq_dist_cartesian(p, q):
    total = Q(0)
    for axis in range(3):
        d = p[axis] - q[axis]
        total = total + d * d
    return total


def contains_value(enclosure, value) -> bool:
    if isinstance(enclosure, S.Interval):
        if isinstance(value, S.Interval):
            return enclosure.hi >= value.lo and value.hi >= enclosure.lo
        return enclosure.contains(value)
    return S.sign(enclosure - value) == 0
