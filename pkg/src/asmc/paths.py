"""Mixed lattice-path configurations on the strict half-grid.

Vertices are pairs ``(x, level)`` with ``0 <= x < level <= n``.  A mixed
path has a Left part of E (east) and S (south) steps followed by a Right
part of F (east) and N (north-east) steps; the vertex shared by the two
parts is the path's *junction*.  Step displacements:

    E: (x, l) -> (x+1, l)      S: (x, l) -> (x, l-1)
    F: (x, l) -> (x+1, l)      N: (x, l) -> (x+1, l+1)

A configuration is one path per start vertex (0, 1)..(0, n), ending on
the diagonal in some order, whose Left sub-configuration and Right
sub-configuration are each vertex-disjoint.  A neutral pair with table
``(k; a; b, beta)`` is encoded as the configuration whose paths are
``E^{a_i} F^{i-1-a_i}`` except for the consecutive special pair

    path k-1:  E^{a_{k-1}} F^{beta} N F^{k-2-a_{k-1}-beta}
    path k:    E^{a_k} S E^{b} F^{k-2-a_k-b}

Duality maps junctions, S-step starts and N-step ends through
``(x, l) -> (l-1-x, l)`` (the mirror of each level's vertex row) and
corresponds to vertical reflection of the underlying matrix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from .errors import (
    InternalInvariantViolation,
    MalformedConfiguration,
    NotOneNStep,
    ParseError,
)
from .inv_table import GenInvTable, ParamVector, gen_table, pair_from_table, table_valid
from .neutral import NeutralPair

STEP_DELTAS = {"E": (1, 0), "S": (0, -1), "F": (1, 0), "N": (1, 1)}
LEFT_STEPS = frozenset("ES")
RIGHT_STEPS = frozenset("FN")

Vertex = tuple[int, int]


@dataclass(frozen=True)
class MixedPath:
    """A path as its start vertex plus a step string like ``"EESFF"``."""

    start: Vertex
    steps: str

    def vertices(self) -> tuple[Vertex, ...]:
        out = [self.start]
        x, level = self.start
        for s in self.steps:
            dx, dl = STEP_DELTAS[s]
            x, level = x + dx, level + dl
            out.append((x, level))
        return tuple(out)

    @property
    def end(self) -> Vertex:
        return self.vertices()[-1]

    @property
    def left_len(self) -> int:
        """Number of leading Left (E/S) steps."""
        for idx, s in enumerate(self.steps):
            if s in RIGHT_STEPS:
                return idx
        return len(self.steps)

    @property
    def junction(self) -> Vertex:
        return self.vertices()[self.left_len]

    def left_vertices(self) -> tuple[Vertex, ...]:
        return self.vertices()[: self.left_len + 1]

    def right_vertices(self) -> tuple[Vertex, ...]:
        return self.vertices()[self.left_len :]


@dataclass(frozen=True)
class MixedConfiguration:
    paths: tuple[MixedPath, ...]

    @property
    def n(self) -> int:
        return len(self.paths)

    def step_count(self, kind: str) -> int:
        return sum(p.steps.count(kind) for p in self.paths)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "paths": [{"start": list(p.start), "steps": p.steps} for p in self.paths],
        }


def config_from_json(obj: dict | str) -> MixedConfiguration:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    try:
        paths = tuple(
            MixedPath(start=(int(p["start"][0]), int(p["start"][1])), steps=str(p["steps"]))
            for p in obj["paths"]
        )
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"configuration JSON needs paths with start and steps: {exc}") from exc
    for p in paths:
        for s in p.steps:
            if s not in STEP_DELTAS:
                raise ParseError(f"unknown step {s!r}")
    return MixedConfiguration(paths)


# ---------------------------------------------------------------------------
# validation


def validate_config(cfg: MixedConfiguration) -> list[str]:
    """Full diagnostic check; returns a list of problems (empty = valid).

    Checks the grid bounds, start vertices, Left-before-Right step order,
    the endpoint permutation and vertex-disjointness of the Left and the
    Right sub-configurations.
    """
    problems: list[str] = []
    n = cfg.n
    for i, p in enumerate(cfg.paths, start=1):
        for s in p.steps:
            if s not in STEP_DELTAS:
                problems.append(f"path {i}: unknown step {s!r}")
                return problems
        if p.start != (0, i):
            problems.append(f"path {i} starts at {p.start}, expected (0, {i})")
        seen_right = False
        for s in p.steps:
            if s in RIGHT_STEPS:
                seen_right = True
            elif seen_right:
                problems.append(f"path {i}: Left step {s!r} after a Right step")
                break
        for x, level in p.vertices():
            if not 0 <= x < level <= n:
                problems.append(f"path {i} leaves the grid at ({x},{level})")
                break
    if problems:
        return problems
    sigma = [p.end[1] for p in cfg.paths]
    if sorted(sigma) != list(range(1, n + 1)):
        problems.append(f"end levels {sigma} are not a permutation of 1..{n}")
    for i, p in enumerate(cfg.paths, start=1):
        if p.end != (p.end[1] - 1, p.end[1]):
            problems.append(f"path {i} ends at {p.end}, not on the diagonal")
    for label, vertex_sets in (
        ("Left", [p.left_vertices() for p in cfg.paths]),
        ("Right", [p.right_vertices() for p in cfg.paths]),
    ):
        seen: dict[Vertex, int] = {}
        for i, vs in enumerate(vertex_sets, start=1):
            for v in vs:
                if v in seen:
                    problems.append(
                        f"{label} parts of paths {seen[v]} and {i} meet at {v}"
                    )
                else:
                    seen[v] = i
    return problems


def _require_valid(cfg: MixedConfiguration) -> None:
    problems = validate_config(cfg)
    if problems:
        raise MalformedConfiguration("; ".join(problems))


# ---------------------------------------------------------------------------
# encoding / decoding neutral pairs


def config_from_pair(pair: NeutralPair) -> MixedConfiguration:
    """Encode a neutral pair as a mixed configuration with one N-step."""
    t = gen_table(pair)
    return config_from_table(t)


def config_from_table(t: GenInvTable) -> MixedConfiguration:
    """Build the configuration straight from a generalized inversion
    table (table validity is the caller's concern for round-trips; an
    invalid table simply yields an invalid configuration)."""
    n, k = t.n, t.k
    paths = []
    for i in range(1, n + 1):
        a = t.a[i - 1]
        if i == k - 1:
            steps = "E" * a + "F" * t.beta + "N" + "F" * (k - 2 - a - t.beta)
        elif i == k:
            steps = "E" * a + "S" + "E" * t.b + "F" * (k - 2 - a - t.b)
        else:
            steps = "E" * a + "F" * (i - 1 - a)
        paths.append(MixedPath((0, i), steps))
    return MixedConfiguration(tuple(paths))


def _run_lengths(steps: str, pattern: str, path_index: int) -> list[int]:
    """Lengths of the consecutive runs when ``steps`` matches the given
    run pattern exactly (e.g. ``"EFNF"`` = E-run, F-run, one N, F-run)."""
    lengths = []
    pos = 0
    for kind in pattern:
        if kind.islower():  # exactly one step
            if pos >= len(steps) or steps[pos] != kind.upper():
                raise MalformedConfiguration(
                    f"path {path_index}: steps {steps!r} do not match pattern {pattern!r}"
                )
            pos += 1
            lengths.append(1)
        else:
            run = 0
            while pos < len(steps) and steps[pos] == kind:
                pos += 1
                run += 1
            lengths.append(run)
    if pos != len(steps):
        raise MalformedConfiguration(
            f"path {path_index}: steps {steps!r} do not match pattern {pattern!r}"
        )
    return lengths


def table_from_config(cfg: MixedConfiguration) -> GenInvTable:
    """Read the generalized inversion table off a one-N configuration."""
    n_steps = cfg.step_count("N")
    if n_steps != 1:
        raise NotOneNStep(n_steps)
    _require_valid(cfg)
    if cfg.step_count("S") != 1:
        raise MalformedConfiguration("expected exactly one S-step")
    k = next(i for i, p in enumerate(cfg.paths, start=1) if "S" in p.steps)
    if "N" not in cfg.paths[k - 2].steps:
        raise MalformedConfiguration(
            f"N-step is not in the path just before the S-path (path {k})"
        )
    a = [0] * cfg.n
    b = beta = 0
    for i, p in enumerate(cfg.paths, start=1):
        if i == k - 1:
            e_run, beta, _, _ = _run_lengths(p.steps, "EFnF", i)
            a[i - 1] = e_run
        elif i == k:
            e_run, _, b, _ = _run_lengths(p.steps, "EsEF", i)
            a[i - 1] = e_run
        else:
            a[i - 1] = _run_lengths(p.steps, "EF", i)[0]
    return GenInvTable(k=k, a=tuple(a), b=b, beta=beta)


def pair_from_config(cfg: MixedConfiguration) -> NeutralPair:
    """Decode a one-N configuration back to its neutral pair."""
    t = table_from_config(cfg)
    check = table_valid(t)
    if not check:
        raise MalformedConfiguration(f"decoded table is invalid: {check.message}")
    return pair_from_table(t)


# ---------------------------------------------------------------------------
# parameters and duality


def config_params(cfg: MixedConfiguration) -> ParamVector:
    """Read (r, i, E, B, J) directly off the paths.

    Independent of the table route: counts steps and measures the special
    vertices instead of decoding the matrix.
    """
    n_steps = cfg.step_count("N")
    if n_steps != 1:
        raise NotOneNStep(n_steps)
    _require_valid(cfg)
    if cfg.step_count("S") != 1:
        raise MalformedConfiguration("expected exactly one S-step")
    n = cfg.n
    r = 0
    e_total = 0
    s_start = n_end = None
    b_run = beta_run = 0
    s_path = n_path = None
    for idx, p in enumerate(cfg.paths, start=1):
        verts = p.vertices()
        for pos, s in enumerate(p.steps):
            if s == "E":
                e_total += 1
                if verts[pos][1] == n:
                    r += 1
            elif s == "S":
                s_start = verts[pos]
                s_path = idx
                b_run = sum(1 for c in p.steps[pos + 1 :] if c == "E")
            elif s == "N":
                n_end = verts[pos + 1]
                n_path = idx
                beta_run = sum(1 for c in p.steps[:pos] if c == "F")
    if s_start is None or s_path != n_path + 1:
        raise MalformedConfiguration("S-step must sit in the path after the N-step")
    junction_gap = abs(cfg.paths[s_path - 1].junction[0] - cfg.paths[n_path - 1].junction[0])
    return ParamVector(
        r=r,
        i=e_total + n_steps,
        e=n_end[0] - s_start[0],
        b=b_run - beta_run,
        j=junction_gap,
    )


def _mirror(v: Vertex) -> Vertex:
    """Mirror a vertex within its level row: (x, l) -> (l-1-x, l)."""
    x, level = v
    return (level - 1 - x, level)


def dual_config(cfg: MixedConfiguration) -> MixedConfiguration:
    """Path duality: junctions, S-starts and N-ends move through
    :func:`_mirror`; an involution matching vertical reflection of the
    underlying matrix.  Defined for configurations with zero or one
    N-step."""
    _require_valid(cfg)
    n = cfg.n
    n_steps = cfg.step_count("N")
    if n_steps == 0:
        paths = []
        for i, p in enumerate(cfg.paths, start=1):
            jx = _mirror(p.junction)[0]
            paths.append(MixedPath((0, i), "E" * jx + "F" * (i - 1 - jx)))
        out = MixedConfiguration(tuple(paths))
    elif n_steps == 1:
        t = table_from_config(cfg)
        k = t.k
        junctions = {i: cfg.paths[i - 1].junction for i in range(1, n + 1)}
        s_path = cfg.paths[k - 1]
        s_pos = s_path.steps.index("S")
        s_start = s_path.vertices()[s_pos]
        n_path = cfg.paths[k - 2]
        n_pos = n_path.steps.index("N")
        n_end = n_path.vertices()[n_pos + 1]

        new_ak = _mirror(s_start)[0]
        level_pair = sorted((_mirror(junctions[k - 1])[0], _mirror(junctions[k])[0]))
        new_ak1 = level_pair[0]
        new_b = level_pair[1] - new_ak
        new_beta = _mirror(n_end)[0] - new_ak1 - 1
        a = [0] * n
        for i in range(1, n + 1):
            if i == k - 1:
                a[i - 1] = new_ak1
            elif i == k:
                a[i - 1] = new_ak
            else:
                a[i - 1] = _mirror(junctions[i])[0]
        out = config_from_table(GenInvTable(k=k, a=tuple(a), b=new_b, beta=new_beta))
    else:
        raise MalformedConfiguration(
            f"duality is defined for at most one N-step, got {n_steps}"
        )
    problems = validate_config(out)
    if problems:
        raise InternalInvariantViolation(f"dual configuration invalid: {problems[0]}")
    return out


# ---------------------------------------------------------------------------
# rendering


def render_ascii(cfg: MixedConfiguration) -> str:
    """Deterministic plain-text picture.

    One line per level from n (top) down to 1, interleaved with connector
    lines; grid vertices are two columns apart.  Characters: ``o`` vertex
    on a path, ``.`` unused grid vertex, ``-`` E-step, ``=`` F-step,
    ``|`` S-step, ``/`` N-step.
    """
    n = cfg.n
    level_chars = {level: ["."] * (2 * level - 1) for level in range(1, n + 1)}
    for level, chars in level_chars.items():
        for x in range(level - 1):
            chars[2 * x + 1] = " "
    connector_chars = {level: [" "] * (2 * level - 1) for level in range(2, n + 1)}

    def mark_level(level: int, col: int, char: str) -> None:
        row = level_chars[level]
        if char == "-" or row[col] != "-":  # E wins over F on shared edges
            row[col] = char

    for p in cfg.paths:
        verts = p.vertices()
        for v in verts:
            level_chars[v[1]][2 * v[0]] = "o"
        for pos, s in enumerate(p.steps):
            x, level = verts[pos]
            if s == "E":
                mark_level(level, 2 * x + 1, "-")
            elif s == "F":
                mark_level(level, 2 * x + 1, "=")
            elif s == "S":
                connector_chars[level][2 * x] = "|"
            elif s == "N":
                connector_chars[level + 1][2 * x + 1] = "/"
    lines = []
    for level in range(n, 0, -1):
        lines.append("".join(level_chars[level]).rstrip())
        if level > 1:
            lines.append("".join(connector_chars[level]).rstrip())
    return "\n".join(lines) + "\n"


_SVG_STYLE = """\
  <style>
    line { stroke-width: 3; stroke-linecap: round; }
    .step-E { stroke: #1565c0; }
    .step-S { stroke: #c62828; }
    .step-F { stroke: #2e7d32; stroke-dasharray: 6 3; }
    .step-N { stroke: #ef6c00; }
    .grid { fill: #bbbbbb; }
    .mark { fill: #222222; }
    text { font: 12px sans-serif; fill: #222222; }
  </style>
"""


def render_svg(cfg: MixedConfiguration, shifted: bool = False) -> str:
    """Standalone SVG document with labeled start/end vertices and one
    stroke class per step kind.  ``shifted`` staggers the levels so the
    grid forms a reversed triangle."""
    n = cfg.n
    scale, margin = 40, 40

    def px(v: Vertex) -> tuple[float, float]:
        x, level = v
        offset = (n - level) / 2 if shifted else 0.0
        return (margin + scale * (x + offset), margin + scale * (n - level))

    width = margin * 2 + scale * max(n - 1, 1)
    height = margin * 2 + scale * (n - 1)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        _SVG_STYLE,
    ]
    for level in range(1, n + 1):
        for x in range(level):
            cx, cy = px((x, level))
            out.append(f'  <circle class="grid" cx="{cx:g}" cy="{cy:g}" r="2"/>')
    for i, p in enumerate(cfg.paths, start=1):
        verts = p.vertices()
        out.append(f'  <g id="path-{i}">')
        for pos, s in enumerate(p.steps):
            (x1, y1), (x2, y2) = px(verts[pos]), px(verts[pos + 1])
            out.append(
                f'    <line class="step-{s}" x1="{x1:g}" y1="{y1:g}" x2="{x2:g}" y2="{y2:g}"/>'
            )
        (sx, sy), (ex, ey) = px(verts[0]), px(verts[-1])
        out.append(f'    <circle class="mark" cx="{sx:g}" cy="{sy:g}" r="4"/>')
        out.append(f'    <text x="{sx - 16:g}" y="{sy + 4:g}">{i}</text>')
        out.append(f'    <circle class="mark" cx="{ex:g}" cy="{ey:g}" r="4"/>')
        out.append(f'    <text x="{ex + 6:g}" y="{ey + 4:g}">{i}\'</text>')
        out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
