"""Normal forms in q-deformed coordinate algebras.

A presentation is a list of rewrite rules that push every word toward a
sorted normal form.  This script walks through the quantum plane and the
2x2 quantum matrix algebra, then shows that the quantum determinant is
central and becomes a single letter once it is adjoined.
"""

from qdeform import (Element, build_presentation, format_element,
                     parse_expression, quantum_determinant)

# The quantum plane: one rule, x2*x1 -> q^-1 x1*x2.
qplane = build_presentation("qplane")
e = parse_expression("x2*x1", qplane.generators)
print("x2*x1 normalizes to:", format_element(qplane.normalize(e), qplane))

# Higher powers reorder with a q-power for every crossing.
e = parse_expression("x2^3*x1^2", qplane.generators)
print("x2^3*x1^2         ->", format_element(qplane.normalize(e), qplane))

# GL_q(2): six relations among the four matrix entries.
glq2 = build_presentation("glq2")
print()
print("GL_q(2) rules:")
for lhs, rhs in glq2.rules.items():
    print("  %s -> %s" % ("*".join(lhs), format_element(rhs, glq2)))

# The commutation of d past a produces the famous lambda b c correction.
da = parse_expression("d*a", glq2.generators)
print()
print("d*a ->", format_element(glq2.normalize(da), glq2))

# The quantum determinant commutes with every generator.
det = quantum_determinant()
print("det_q =", format_element(det, glq2))
print("central in glq2:", glq2.is_central(det))

# After adjoining D (and its inverse), det_q rewrites to the letter D.
det_pres = build_presentation("glq2_det")
diff = det_pres.normalize(det - Element.word(("D",)))
print("det_q - D normalizes to:", format_element(diff, det_pres))

# Every presentation in the catalog is confluent at degree 4: no word
# has two distinct normal forms, so the rewrite answer is canonical.
bad = glq2.check_overlaps(4)
print("unresolved overlaps in glq2 at degree 4:", len(bad))
