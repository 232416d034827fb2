"""Macaulay2 and Singular scripts for cross-checking a lifted ideal outside this package.

Both templates declare the ring with ``x1..xn, u1..ut``, define the lifted
ideal ``I`` and the unlifted ``J``, print Betti tables of both, and (when a
complex is given) check that consecutive differentials compose to zero.
"""

from __future__ import annotations


def _vars(ring):
    return [ring.var_name(k) for k in range(ring.nvars)]


def _m2_field(field):
    return "QQ" if field.is_rational else f"ZZ/{field.characteristic}"


def _singular_field(field):
    return "0" if field.is_rational else str(field.characteristic)


def to_macaulay2(ring, lifted, base=None, complex_=None):
    vs = ",".join(_vars(ring))
    lines = [
        "-- lifted ideal; run with: M2 --script <file>",
        f"R = {_m2_field(ring.field)}[{vs}, MonomialOrder => GLex];",
        "I = ideal(" + ", ".join(str(p) for p in lifted) + ");",
    ]
    if base is not None:
        lines.append("J = ideal(" + ", ".join(str(g) for g in base.gens) + ");")
        lines.append("print betti res J;")
    lines.append("print betti res I;")
    lines.append("print(leadTerm ideal gens gb I);")
    if complex_ is not None:
        for s in range(1, complex_.length + 1):
            rows = complex_.differential(s).to_rows()
            body = ", ".join("{" + ", ".join(str(p) for p in row) + "}" for row in rows)
            lines.append(f"d{s} = matrix(R, {{{body}}});")
        for s in range(1, complex_.length):
            lines.append(f"assert(d{s} * d{s + 1} == 0);")
    return "\n".join(lines) + "\n"


def to_singular(ring, lifted, base=None, complex_=None):
    vs = ",".join(_vars(ring))
    lines = [
        "// lifted ideal; run with: Singular -q <file>",
        f"ring R = {_singular_field(ring.field)},({vs}),Dp;",
        "ideal I = " + ", ".join(str(p) for p in lifted) + ";",
    ]
    if base is not None:
        lines.append("ideal J = " + ", ".join(str(g) for g in base.gens) + ";")
        lines.append('print(betti(mres(J, 0)), "betti");')
    lines.append('print(betti(mres(I, 0)), "betti");')
    lines.append("print(lead(std(I)));")
    if complex_ is not None:
        for s in range(1, complex_.length + 1):
            M = complex_.differential(s)
            entries = ", ".join(str(p) for row in M.to_rows() for p in row)
            lines.append(f"matrix d{s}[{M.nrows}][{M.ncols}] = {entries};")
        for s in range(1, complex_.length):
            lines.append(f'if (size(module(d{s} * d{s + 1})) != 0) {{ "d{s} d{s + 1} != 0"; }}')
    lines.append("quit;")
    return "\n".join(lines) + "\n"


def export_script(fmt, ring, lifted, base=None, complex_=None):
    if fmt == "m2":
        return to_macaulay2(ring, lifted, base, complex_)
    if fmt == "singular":
        return to_singular(ring, lifted, base, complex_)
    raise ValueError(f"unknown export format {fmt!r}")
