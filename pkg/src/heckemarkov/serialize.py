"""JSON / CSV / LaTeX serialization of polynomials, rational functions
and partition-indexed tables.

BivarPoly: list of term records {"c": "a/b", "q": dq, "r": dr} in
graded-lex order.  RatFun: {"num": [...], "den": [...]}.  Tables carry an
explicit "order" field so the axis convention travels with the data.
"""

from __future__ import annotations

from fractions import Fraction

from .ratfun import BivarPoly, RatFun


def poly_to_json(p: BivarPoly) -> list:
    return [
        {"c": str(c), "q": dq, "r": dr} for (dq, dr), c in p.sorted_terms()
    ]


def poly_from_json(data: list) -> BivarPoly:
    return BivarPoly(
        {(int(t["q"]), int(t["r"])): Fraction(t["c"]) for t in data}
    )


def ratfun_to_json(f: RatFun) -> dict:
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def ratfun_from_json(data: dict) -> RatFun:
    return RatFun(poly_from_json(data["num"]), poly_from_json(data["den"]))


def table_to_csv(table) -> str:
    from .partitions import format_partition

    lines = []
    header = [""] + [f"({format_partition(p)})" for p in table.order]
    lines.append(";".join(header))
    for p, row in zip(table.order, table.entries):
        cells = [f"({format_partition(p)})"] + [str(e) for e in row]
        lines.append(";".join(cells))
    return "\n".join(lines) + "\n"


def table_to_latex(table) -> str:
    from .partitions import format_partition

    cols = "l|" + "c" * len(table.order)
    lines = [f"\\begin{{array}}{{{cols}}}"]
    head = " & ".join(
        ["" ] + [f"({format_partition(p)})" for p in table.order]
    )
    lines.append(head + " \\\\ \\hline")
    for p, row in zip(table.order, table.entries):
        cells = [f"({format_partition(p)})"] + [str(e) for e in row]
        lines.append(" & ".join(cells) + " \\\\")
    lines.append("\\end{array}")
    return "\n".join(lines) + "\n"
