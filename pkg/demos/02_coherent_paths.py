#!/usr/bin/env python3
"""Walkthrough: the homotopy coherent path category.

Arrows are cube functions on half-open integer intervals; composition is
concatenation, and the simplicial operators act by inserting poles,
dropping the lowest ordinate, or merging neighbours by minimum.
"""

from complicial import (
    PathArrow,
    compose_path,
    delta,
    hc_horn_member,
    hom_set,
    path_act,
    sigma,
    split_at_zeros,
    top_special_arrow,
)
from complicial.operators import MINUS, PLUS

print("== homsets are cubes one step down ==")
for r, s in [(0, 0), (0, 1), (0, 3)]:
    print(f"hom({r},{s}) census:", hom_set(r, s).count_nondegenerate())

print()
print("== concatenation and splitting ==")
a = PathArrow(0, 2, 0, (PLUS, MINUS))
b = PathArrow(2, 5, 0, (PLUS, PLUS, MINUS))
c = compose_path(b, a)
print("composite of <0,2> and <2,5>:", c.w)
d = PathArrow(0, 5, 0, (MINUS, PLUS, MINUS, PLUS, MINUS))
print("splitting", d.w, "->", [(p.r, p.s) for p in split_at_zeros(d)])

print()
print("== operator actions ==")
top = top_special_arrow(0, 2)
print("top special of hom(0,2):", top.w)
print("inserting a pole via a face:", path_act(delta(3, 1), top).w)
print("dropping the lowest ordinate:", path_act(sigma(1, 0), PathArrow(0, 2, 1, (1, MINUS))).w)
merged = path_act(sigma(2, 1), PathArrow(0, 3, 2, (1, 2, MINUS)))
print("merging ordinates by minimum:", merged.w)

print()
print("== inner coherent horn membership ==")
inside = PathArrow(0, 3, 1, (1, PLUS, MINUS))
outside = PathArrow(0, 3, 2, (1, 2, MINUS))
print(inside.w, "in the (3,1)-horn:", hc_horn_member(3, 1, inside))
print(outside.w, "in the (3,1)-horn:", hc_horn_member(3, 1, outside))
