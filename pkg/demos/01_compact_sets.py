"""Compact interval-union sets and the distances between them."""

from mvfix import CompactSet, dist_point_set, excess, hausdorff, nearest_point

# construction normalizes: sorted, merged, touching intervals joined
A = CompactSet([(3.0, 4.0), (0.0, 1.0), (1.0, 1.5)])
print("A =", A)

B = CompactSet([(2.0, 2.5), (5.0, 5.0)])
print("B =", B)

# point-to-set distance and the witnessing nearest point
for x in (0.5, 1.8, 4.6):
    d = dist_point_set(x, B)
    p = nearest_point(x, B)
    print(f"D({x}, B) = {d:.4f}, attained at {p}")

# one-sided excess is asymmetric; the hausdorff distance symmetrizes it
print("excess(A, B) =", excess(A, B))
print("excess(B, A) =", excess(B, A))
print("hausdorff(A, B) =", hausdorff(A, B))

# for single intervals the two-sided distance is max(|a-c|, |b-d|)
I = CompactSet.interval(0.0, 1.0)
J = CompactSet.interval(0.25, 0.5)
print("hausdorff([0,1], [1/4,1/2]) =", hausdorff(I, J), "(= max(0.25, 0.5))")

# membership and simple set queries
print("1.2 in A:", 1.2 in A)
print("A.min =", A.min, " A.max =", A.max, " total length =", A.total_length)
