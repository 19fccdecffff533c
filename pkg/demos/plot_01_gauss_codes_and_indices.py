"""
Gauss codes, chord indices and numberings
=========================================

"""

from vkt.diagram import carter_genus, parse_gauss, to_code
from vkt.parity import alexander_numbering, chord_indices, index_report, is_numberable

# the virtual trefoil: two chords on one circle, both positive
d = parse_gauss("O1+O2+U1+U2+")
print("canonical code:", to_code(d))
print("Carter genus:", carter_genus(d))

# each chord's index, with the four counts it comes from
for cid in d.signs:
    r = index_report(d, cid)
    print(f"chord {cid}: I = {r.index}  (r+={r.r_plus}, r-={r.r_minus}, l+={r.l_plus}, l-={r.l_minus})")

# a nonzero index rules out an Alexander numbering over the integers and mod 2
for p in (0, 2):
    print(f"p={p}: numberable={is_numberable(d, p)}, numbering={alexander_numbering(d, p)}")

# the standard trefoil is planar, so every index vanishes and a numbering exists
trefoil = parse_gauss("O1+U2+O3+U1+O2+U3+")
print(chord_indices(trefoil))
print(alexander_numbering(trefoil))
