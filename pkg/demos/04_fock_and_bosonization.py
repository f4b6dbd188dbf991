"""Fock representations, Schwinger blocks, bosonization, contraction.

Everything numeric in this script runs behind guard bands: a finite
cutoff corrupts the last columns of any relation that raises the level,
so residuals are read off the interior columns only.
"""

import numpy as np

from qdeform import (bosonization_catalog, bosonization_report,
                     central_elements, central_values, contraction_probe,
                     fock_rep, rep_residual, schwinger_decompose,
                     singular_rep)

DIM, Q0 = 16, 0.7

# Floating-point Fock representation of the q-oscillator, worst relation
# residual over the guarded band, and the exact-arithmetic counterpart
# where the same residual is identically zero as a function of q.
rep = fock_rep("osc_q", DIM, Q0)
print("osc_q float residual:", rep_residual(rep))
exact = fock_rep("osc_q", DIM, Q0, exact=True)
print("osc_q exact residual:", rep_residual(exact))

# The Casimir-like center acts by a scalar (zero: the Fock module is
# the zero-central-charge module); rel_dev discounts float cancellation
# between terms whose norms grow like q^-N.
cq = central_elements("osc_q")["c_q"]
info = central_values(rep, cq)
print("c_q acts by %.6f, relative deviation %.2e (term scale %.1e)"
      % (info["value"].real, info["rel_dev"], info["scale"]))

# A vacuum-free (singular) representation: the constant ladder satisfies
# A A† - q A† A = 1 on interior columns with no lowest weight.
sing = singular_rep(DIM, Q0)
print("singular rep residual:", rep_residual(sing))

# Two q-oscillators assemble an sl_q(2) action (Schwinger construction);
# the two-mode Fock space splits into multiplets of every dimension,
# with the Casimir pinned to [t/2][t/2+1] on each block.
print()
print("Schwinger blocks (dim %d x %d):" % (8, 8))
for row in schwinger_decompose(8, Q0):
    print("  t=%d  dim=%d  casimir=%9.5f  expected=%9.5f  residual=%.2e"
          % (row["t"], row["dim"], row["casimir"].real,
             row["expected"].real, row["residual"]))

# The bosonization catalog: algebra-to-oscillator realizations, each
# validated in its own mode (symbolic rewrite or guarded Fock matrices).
print()
print("bosonization catalog:")
notes = {e["id"]: e.get("notes", "") for e in bosonization_catalog()}
for row in bosonization_report(dim=DIM, q0=Q0):
    flag = "partial scope" if "limited" in notes[row["id"]] else ""
    print("  %-22s %-4s residual=%s %s"
          % (row["id"], row["status"],
             "exact" if row["residual"] == 0.0
             else "%.2e" % row["residual"], flag))

# Contraction: rescaled oscillator generators converge to the sl_q(2)
# relations as eps(j) = q0^(2j) -> 0, quadratically in eps, and the
# scaled Casimir approaches q0^2/(q0^2 - 1) at the same rate.
print()
print("contraction probe at q0=0.5:")
prev = None
for row in contraction_probe(j_list=(2, 4, 6, 8), q0=0.5, dim=16):
    mark = "" if prev is None else ("  (down)" if row["residual"] < prev
                                    else "  (UP!)")
    print("  j=%d  eps=%.2e  residual=%.3e  c2 gap=%.3e%s"
          % (row["j"], row["eps"], row["residual"], row["c2_gap"], mark))
    prev = row["residual"]
print("c2 limit:", row["c2_limit"])
