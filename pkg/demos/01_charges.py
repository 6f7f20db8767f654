"""A tour of the statistics on alternating sign matrices with one -1.

Builds the 12x12 running example from its encoded form, locates the cell
geometry around the -1, and reads off the classical statistics (r, s, i)
and the three charge statistics (E, B, J), including how all of them
behave under vertical reflection.

Run:  python demos/01_charges.py
"""

from asmc import (
    cell_sums,
    charges,
    classical_params,
    geometry,
    matrix_to_text,
    pair_from_table,
    reflect,
    restore,
    sign_class,
    table_from_text,
)

table = table_from_text("10; 0 0 2 2 0 0 1 5 0 3 6 6; 4 5")
pair = pair_from_table(table)
neutral = pair.matrix
charged = restore(pair)

print("A positive matrix with a single -1 (rebuilt from its encoding):\n")
print(matrix_to_text(charged))

g = geometry(charged)
print(f"The -1 sits in column {g.opening_col} (the opening column), row {g.closing_row}.")
print(f"The highest 1 of that column marks the opening row, row {g.opening_row}.")
print(f"Rows strictly between them ({list(g.enclosed_rows)}) are enclosed,")
print(f"so the matrix is {sign_class(charged).value}: the lowest enclosed row")
print("has its 1 on the right of the opening column.\n")

p = classical_params(charged)
ch = charges(charged)
print(f"classical statistics   r={p.r}  s={p.s}  i={p.i}")
print(f"charge statistics      E={ch.e}  B={ch.b}  J={ch.j}")
print(f"  (E sums the enclosed right side, B = c - ell = {ch.c} - {ch.ell},")
print(f"   J = c + ell + |E| + 1 = {ch.c} + {ch.ell} + {abs(ch.e)} + 1)\n")

print("Its neutral companion (same r, i and J; E moved into B):\n")
print(matrix_to_text(neutral))
s = cell_sums(neutral)
cn = charges(neutral)
print(f"ell={s.ell}  c={s.c}  ->  E={cn.e}  B={cn.b}  J={cn.j}\n")

mirror = reflect(charged)
pm, cm = classical_params(mirror), charges(mirror)
print("Vertical reflection negates both charges and fixes J:")
print(f"  r + r-reflected = {p.r} + {pm.r} = {p.r + pm.r}   (always n - 1)")
print(f"  i + i-reflected = {p.i} + {pm.i}  (always C(n,2) + s)")
print(f"  E: {ch.e} -> {cm.e},  B: {ch.b} -> {cm.b},  J: {ch.j} -> {cm.j}")
