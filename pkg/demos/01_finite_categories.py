"""Finite categories as explicit tables: validation, functor enumeration,
natural isomorphism checking.

Run:  python demos/01_finite_categories.py
"""

from enrichkit.errors import AssociativityViolation
from enrichkit.fincat import (
    NatIso,
    check_nat_iso,
    enumerate_functors,
    fin_functor,
    monoid_cat,
    parallel_pair,
    terminal_cat,
    walking_arrow,
)

print("== categories from tables ==")
point = terminal_cat()
arrow = walking_arrow()
print(f"point: {point}")
print(f"walking arrow: {arrow}")

print("\n== exhaustive functor enumeration ==")
print("point -> arrow:", len(enumerate_functors(point, arrow)), "functors")
print("arrow -> point:", len(enumerate_functors(arrow, point)), "functor")
fs = enumerate_functors(arrow, arrow)
print("arrow -> arrow:", len(fs), "functors with object maps",
      [f.ob_map for f in fs])

print("\n== a corrupted composition table is caught with a witness ==")
mult = {(f"r{g}", f"r{f}"): f"r{(g + f) % 3}" for g in range(3) for f in range(3)}
mult[("r1", "r2")] = "r1"  # the true composite is r0
try:
    monoid_cat(["r0", "r1", "r2"], mult)
except AssociativityViolation as exc:
    print("caught:", exc)
    print("witness triple:", exc.witness)

print("\n== naturality squares are checked one by one ==")
pp = parallel_pair()
fu = fin_functor(arrow, pp, (0, 1), (pp.mor("id_p"), pp.mor("id_q"), pp.mor("u")))
fv = fin_functor(arrow, pp, (0, 1), (pp.mor("id_p"), pp.mor("id_q"), pp.mor("v")))
verdict = check_nat_iso(NatIso(fu, fv, (pp.mor("id_p"), pp.mor("id_q"))))
print("identity components between the two distinct functors:",
      "valid" if verdict.ok else f"failing squares {verdict.failing_squares}")
