"""From matrices to generalized inversion tables to lattice paths.

Shows the two encodings of a (neutral matrix, charge) pair - the table
(k; a_1..a_n; b, beta) and the mixed path configuration - and the two
involutions that act so simply on them: the charge swap (replace beta)
and path duality (mirror every level).

Run:  python demos/03_tables_and_paths.py
"""

from asmc import (
    charges,
    config_from_pair,
    config_params,
    dual_config,
    dual_table,
    gen_table,
    neutralize,
    pair_from_table,
    reflect,
    render_ascii,
    restore,
    swap_charges,
    table_from_text,
)

pair = pair_from_table(table_from_text("10; 0 0 2 2 0 0 1 5 0 3 6 6; 4 5"))
charged = restore(pair)

t = gen_table(pair)
print(f"Generalized inversion table of the pair:  {t.to_text()}")
print(f"  a_i = entries below row n+1-i, left of that row's (leftmost) 1")
print(f"  b = closing sum = {t.b},  beta = charge + leading sum = {t.beta}\n")

cfg = config_from_pair(pair)
print("The same data as one east-going path per level; the unique north-east")
print("and south steps sit in the two special consecutive paths:\n")
print(render_ascii(cfg))
print("Step kinds: '-' Left east, '=' Right east, '|' south, '/' north-east.\n")

pv = config_params(cfg)
print(f"Statistics read straight off the picture: r={pv.r} i={pv.i} E={pv.e} B={pv.b} J={pv.j}")
print("  r = east steps on the top level, i = east + north-east steps,")
print("  E = signed gap from the south step to the north-east step's end,")
print("  J = gap between the two special junctions.\n")

swapped = swap_charges(charged)
ts = gen_table(neutralize(swapped))
print("The charge swap only rewrites beta in the table:")
print(f"  before: {t.to_text()}")
print(f"  after:  {ts.to_text()}")
ch, cs = charges(charged), charges(swapped)
print(f"  and indeed E,B swap: ({ch.e},{ch.b}) -> ({cs.e},{cs.b})\n")

print("Path duality mirrors each level row and matches vertical reflection:")
dual = dual_config(cfg)
print(render_ascii(dual))
print(f"  dual table: {dual_table(t).to_text()}")
print(f"  equals the reflected matrix's configuration: "
      f"{dual == config_from_pair(neutralize(reflect(charged)))}")
