"""Command-line front end.

Every subcommand prints a JSON document
``{command, input, payload, verified?, failures?}`` with sorted keys, or an
aligned plain-text rendering with ``--table``.  Exit status: 0 on success,
1 when an identity fails, 2 on usage errors.
"""

from __future__ import annotations

import json
import sys
from collections import Counter
from typing import Any

import click

from . import cohomo, elemtrans, facets, parahoric, verify
from .errors import AlcoveKitError
from .rootsys import Root, SimpleType, build_root_system, extended_diagram, format_root


def _roots(rs: tuple[Root, ...] | list[Root]) -> list[list[int]]:
    return [list(r) for r in rs]


def _render_table(doc: dict) -> str:
    rows: list[tuple[str, str]] = []

    def walk(prefix: str, value: Any) -> None:
        if isinstance(value, dict) and value:
            for k in sorted(value):
                walk(f"{prefix}.{k}" if prefix else str(k), value[k])
        else:
            rows.append((prefix, value if isinstance(value, str) else json.dumps(value, sort_keys=True)))

    walk("", doc)
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def emit(command: str, inputs: dict, payload: dict, *, verified: bool | None = None,
         failures: list | None = None, table: bool = False) -> None:
    doc: dict[str, Any] = {"command": command, "input": inputs, "payload": payload}
    if verified is not None:
        doc["verified"] = verified
    if failures is not None:
        doc["failures"] = failures
    if table:
        click.echo(_render_table(doc))
    else:
        click.echo(json.dumps(doc, sort_keys=True, indent=2))
    if verified is False and command != "cohomology":
        sys.exit(1)


def _parse_type(text: str) -> SimpleType:
    try:
        return SimpleType.parse(text)
    except AlcoveKitError as exc:
        raise click.BadParameter(str(exc), param_hint="TYPE") from exc


def _parse_subset(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return sorted({int(x) for x in text.replace(" ", "").split(",") if x})
    except ValueError as exc:
        raise click.BadParameter(f"expected comma-separated integers, got {text!r}", param_hint="--subset") from exc


def output_options(f):
    f = click.option("--table", "table", is_flag=True, help="Aligned plain-text output.")(f)
    f = click.option("--json", "as_json", is_flag=True, help="JSON output (default).")(f)
    return f


class _Group(click.Group):
    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except AlcoveKitError as exc:
            raise click.UsageError(str(exc), ctx) from exc


@click.group(cls=_Group)
def main() -> None:
    """Exact root-system, alcove and parahoric computations."""


@main.command()
@click.argument("type_", metavar="TYPE")
@output_options
def roots(type_: str, as_json: bool, table: bool) -> None:
    """Root counts, highest root and marks."""
    t = _parse_type(type_)
    rs = build_root_system(t)
    lengths = Counter(rs.lengths[r] for r in rs.all_roots)
    payload = {
        "rank": rs.rank,
        "roots": len(rs.all_roots),
        "positive_roots": len(rs.positives),
        "highest": list(rs.highest),
        "highest_root": format_root(rs.highest),
        "marks": list(rs.marks),
        "cartan": [list(row) for row in rs.cartan],
        "long_roots": lengths["long"],
        "short_roots": lengths["short"],
    }
    emit("roots", {"type": t.label}, payload, table=table)


@main.command()
@click.argument("type_", metavar="TYPE")
@output_options
def alcove(type_: str, as_json: bool, table: bool) -> None:
    """Vertices of the fundamental alcove and the extended diagram."""
    t = _parse_type(type_)
    rs = build_root_system(t)
    ext = extended_diagram(rs)
    payload = {
        "vertices": [
            {"label": v.label, "point": v.point.as_strings(), "hyperspecial": v.label == 0 or rs.mark(v.label) == 1}
            for v in parahoric.alcove_vertices(rs)
        ],
        "extended_edges": [list(e) for e in ext.edges],
        "attachment": list(ext.attachment),
    }
    emit("alcove", {"type": t.label}, payload, table=table)


@main.command()
@click.argument("type_", metavar="TYPE")
@click.argument("alpha", type=int)
@output_options
def mu(type_: str, alpha: int, as_json: bool, table: bool) -> None:
    """Positive roots whose ALPHA-coefficient equals the mark."""
    t = _parse_type(type_)
    rs = build_root_system(t)
    m = parahoric.mu_set(rs, alpha)
    payload = {"alpha": alpha, "c_alpha": rs.mark(alpha), "mu": _roots(m), "size": len(m)}
    emit("mu", {"type": t.label, "alpha": alpha}, payload, table=table)


@main.command()
@click.argument("type_", metavar="TYPE")
@click.argument("alpha", type=int)
@output_options
def quotients(type_: str, alpha: int, as_json: bool, table: bool) -> None:
    """Root sets of the two unipotent quotients at ALPHA."""
    t = _parse_type(type_)
    rs = build_root_system(t)
    q = parahoric.quotient_root_sets(rs, alpha)
    payload = {
        "alpha": alpha,
        "pi_side": _roots(q.pi_side),
        "h_side": _roots(q.h_side),
        "hyperspecial": q.hyperspecial,
    }
    emit("quotients", {"type": t.label, "alpha": alpha}, payload, table=table)


@main.command()
@click.argument("type_", metavar="TYPE")
@output_options
def duality(type_: str, as_json: bool, table: bool) -> None:
    """pi_side = -h_side for every simple root, flagged by hyperspeciality."""
    t = _parse_type(type_)
    rs = build_root_system(t)
    rows = []
    for a in range(1, rs.rank + 1):
        rows.append({"alpha": a, "c_alpha": rs.mark(a), "hyperspecial": rs.mark(a) == 1,
                     "duality": parahoric.check_duality(rs, a)})
    ok = all(r["duality"] for r in rows if r["hyperspecial"])
    emit("duality", {"type": t.label}, {"simple_roots": rows}, verified=ok, table=table)


@main.command()
@click.argument("type_", metavar="TYPE")
@output_options
def census(type_: str, as_json: bool, table: bool) -> None:
    """Hyperspecial vertices of the alcove (the origin included)."""
    t = _parse_type(type_)
    rs = build_root_system(t)
    verts = parahoric.hyperspecial_vertices(rs)
    ok = len(verts) == verify.expected_census(t)
    emit("census", {"type": t.label}, {"count": len(verts), "vertices": verts}, verified=ok, table=table)


@main.command("facets")
@click.argument("type_", metavar="TYPE")
@output_options
def facets_cmd(type_: str, as_json: bool, table: bool) -> None:
    """Every facet of the closed alcove with its reductive-quotient type."""
    t = _parse_type(type_)
    rs = build_root_system(t)
    rows = []
    for F in facets.all_facets(rs):
        data = facets.phi_f(rs, F)
        rows.append({
            "vanishing": sorted(F.vanishing),
            "barycenter": F.barycenter.as_strings(),
            "phi_f_size": len(data.phi_f),
            "quotient_type": [q.label for q in data.quotient_type],
        })
    emit("facets", {"type": t.label}, {"facets": rows, "count": len(rows)}, table=table)


@main.command("star")
@click.argument("type_", metavar="TYPE")
@click.option("--subset", default=None, help="Vanishing set J of affine simple roots, e.g. '0,2'.")
@output_options
def star_cmd(type_: str, subset: str | None, as_json: bool, table: bool) -> None:
    """Star of the facet F_J and the parabolic subset of each member."""
    t = _parse_type(type_)
    rs = build_root_system(t)
    F = facets.facet_from_subset(rs, _parse_subset(subset))
    rows = [
        {"vanishing": sorted(G.vanishing), "parabolic_subset": sorted(facets.parabolic_subset(rs, F, G))}
        for G in facets.star(rs, F)
    ]
    problems = facets.star_failures(rs, F)
    emit("star", {"type": t.label, "subset": sorted(F.vanishing)},
         {"facet": sorted(F.vanishing), "members": rows, "size": len(rows)},
         verified=not problems, failures=problems, table=table)


@main.command()
@click.argument("type_", metavar="TYPE")
@click.option("--subset", default=None, help="Parabolic subset I of simple roots, e.g. '1,3'.")
@output_options
def ell(type_: str, subset: str | None, as_json: bool, table: bool) -> None:
    """Length-one Weyl elements keeping I positive."""
    t = _parse_type(type_)
    rs = build_root_system(t)
    I = _parse_subset(subset)
    count = cohomo.ell_count(rs, I)
    expected = rs.rank - len(I)
    payload = {"ell": count, "complement_size": expected, "demazure": cohomo.demazure_flag(rs, I)}
    emit("ell", {"type": t.label, "subset": I}, payload, verified=count == expected, table=table)


@main.command()
@click.argument("type_", metavar="TYPE")
@output_options
def key2(type_: str, as_json: bool, table: bool) -> None:
    """Pushforward computation for G2, F4 and E8."""
    t = _parse_type(type_)
    rep = cohomo.key2_report(t)
    rs = build_root_system(t)
    problems = cohomo.key2_failures(rep, rs)
    payload = {
        "attachment": rep.attachment,
        "c_alpha": rep.c_alpha,
        "coroot_on_attachment": rep.coroot_on_attachment,
        "mu": _roots(rep.mu),
        "degree_count": len(rep.degrees),
        "degree_multiset": {str(k): v for k, v in rep.degree_multiset().items()},
        "r0_rank": rep.r0_rank,
        "r1_rank": rep.r1_rank,
    }
    emit("key2", {"type": t.label}, payload, verified=not problems, failures=problems, table=table)


@main.command()
@click.argument("type_", metavar="TYPE")
@click.option("--genus", "genus", type=int, required=True)
@click.option("--char", "char", type=int, default=0, show_default=True)
@output_options
def cohomology(type_: str, genus: int, char: int, as_json: bool, table: bool) -> None:
    """Tangent and cotangent cohomology triples of the stable locus."""
    t = _parse_type(type_)
    gate = cohomo.hypothesis_gate(genus, char, t)
    payload: dict[str, Any] = {
        "gate": {"genus_ok": gate.genus_ok, "char_ok": gate.char_ok, "codim_bound": gate.codim_bound},
    }
    if gate.ok:
        payload["tangent"] = cohomo.stack_tangent_cohomology(genus, t).as_list()
        payload["cotangent"] = cohomo.stack_cotangent_cohomology(genus, t).as_list()
    emit("cohomology", {"type": t.label, "genus": genus, "char": char}, payload, verified=gate.ok, table=table)


@main.command()
@click.argument("type_", metavar="TYPE")
@click.option("--genus", "genus", type=int, required=True)
@output_options
def codim(type_: str, genus: int, as_json: bool, table: bool) -> None:
    """Lower bound for the codimension of the unstable locus."""
    t = _parse_type(type_)
    rs = build_root_system(t)
    sizes = {str(a): len(parahoric.h_side(rs, a)) for a in range(1, rs.rank + 1)}
    payload = {"codim_bound": cohomo.codim_bound(genus, t), "h_side_sizes": sizes,
               "genus_ok": cohomo.genus_ok(genus, t)}
    emit("codim", {"type": t.label, "genus": genus}, payload, table=table)


@main.command("elemtrans")
@click.option("--trunc", type=click.IntRange(min=1), default=2, show_default=True)
@click.option("--max-degree", type=click.IntRange(min=0), default=3, show_default=True)
@click.option("--char", "char", type=int, default=0, show_default=True)
@output_options
def elemtrans_cmd(trunc: int, max_degree: int, char: int, as_json: bool, table: bool) -> None:
    """Kernel dimensions, generators and syzygy of the evaluation map."""
    ring = elemtrans.TruncatedRing(trunc, char)
    dims = {str(d): elemtrans.kernel_slice(ring, d).dimension for d in range(max_degree + 1)}
    closed = {str(d): elemtrans.closed_form(trunc, d) for d in range(max_degree + 1)}
    gens = elemtrans.check_generators(ring, max_degree)
    syz = elemtrans.check_syzygy(ring, max_degree)
    payload = {"kernel_dimensions": dims, "closed_form": closed, "generators": gens, "syzygy": syz}
    emit("elemtrans", {"trunc": trunc, "max_degree": max_degree, "char": char}, payload,
         verified=dims == closed and gens and syz, table=table)


@main.command("verify-all")
@click.option("--max-rank", type=click.IntRange(min=1), default=8, show_default=True)
@output_options
def verify_all(max_rank: int, as_json: bool, table: bool) -> None:
    """Run every identity check for all types up to MAX_RANK."""
    checks = verify.run_all(max_rank)
    failures = [c.failure() for c in checks if not c.passed]
    groups = Counter(c.group for c in checks)
    payload = {
        "checks": len(checks),
        "passed": sum(c.passed for c in checks),
        "groups": dict(sorted(groups.items())),
        "types": sorted({c.type_label for c in checks if c.type_label != "-"}),
    }
    emit("verify-all", {"max_rank": max_rank}, payload, verified=not failures, failures=failures, table=table)


if __name__ == "__main__":
    main()
