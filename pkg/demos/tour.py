"""A guided tour of the toolkit, end to end.

Run from the repository root:

    python demos/tour.py

Each section prints what it is about to compute and the exact result.
Everything is exact arithmetic; re-running produces identical output.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cyweb import (
    Ambient,
    Hypersurface,
    LocalModel,
    PolynomialRing,
    analyze_singular_locus,
    buchberger,
    compute_table,
    consistency_check,
    cyclotomic_field,
    decide_simplicity,
    dim_image_lambda,
    export_dot,
    format_polynomial,
    load_hypersurface,
    load_transition_record,
    load_web_graph,
    local_invariants,
    quotient_dimension,
    table_csv,
    validate,
    verify_splitting_family,
)

DATA = Path(__file__).resolve().parent.parent / "src" / "cyweb" / "data"


def section(title):
    print(f"\n=== {title} " + "=" * max(0, 60 - len(title)))


section("exact polynomials over a cyclotomic field")
field = cyclotomic_field("e", 5)
ring = PolynomialRing(["z", "w"], field)
z, w = ring.gens()
e = ring.constant(field.generator())
product = ring.one
for i in range(5):
    product = product * (z - e**i * w)
print("prod (z - e^i w) =", format_polynomial(product))

section("a Groebner basis and a quotient dimension")
xyzw = PolynomialRing(["x", "y", "z", "w"])
x, y, zz, ww = xyzw.gens()
germ_poly = x**2 - y**2 - zz**5 + ww**5
basis = buchberger(list(germ_poly.gradient()))
print("reduced basis of the Jacobian ideal:",
      [format_polynomial(g) for g in basis])
dim, staircase = quotient_dimension(basis)
print("quotient dimension:", dim, "(the Milnor number of the germ)")

section("local invariants of the germ")
germ = LocalModel(germ_poly, "compound A4 germ")
print(local_invariants(germ).to_text(germ.name))

section("certifying sixteen nodes on a singular quintic")
surface = load_hypersurface((DATA / "quintic_with_plane.hsf").read_text())
print(analyze_singular_locus(surface).to_text())

section("splitting one compound point into ten nodes")
record = load_transition_record((DATA / "quintic_ca4.tr").read_text())
verification = verify_splitting_family(record.witness)
print(verification.to_text(singular_count=record.singular_data.count))

section("the invariant table of the transition and its deformation")
conifold = load_transition_record((DATA / "quintic_conifold100.tr").read_text())
print(table_csv([compute_table(record), compute_table(conifold)]), end="")
for finding in consistency_check(record):
    print(finding)
print("dim im lambda:", dim_image_lambda(record))

section("simplicity verdicts")
for name in ("quintic_with_plane.tr", "quintic_triple_point.tr", "namikawa.tr"):
    rec = load_transition_record((DATA / name).read_text())
    print(f"{rec.name}: {decide_simplicity(rec)}")
print(f"{record.name}: {decide_simplicity(record, verification.verified)}")

section("the example web")
graph = load_web_graph((DATA / "gross_web.web").read_text(), base_dir=DATA)
print("components:", graph.connected_components())
print("path M_Q -> M_D:", graph.path("M_Q", "M_D"))
errors = [f for f in validate(graph) if f.severity == "ERROR"]
print("validation errors:", len(errors))
print(export_dot(graph), end="")
