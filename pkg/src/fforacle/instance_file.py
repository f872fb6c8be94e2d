"""
实例文件的文本格式

    # 注释
    p 3
    dims 2 2
    rows 2,0 0,2
    cols 3
    entry 0 0 1@2,0,0;0,0,0 2@1,1,0;0,0,0
    entry 0 1 0

每个项写成 系数@指数，指数按因子用分号分隔。未出现的元素视为零。
"""

from typing import Dict, List, Tuple

from ..utils.errors import OracleInputError
from .forms import MorphismMatrix, MultiForm, zero_form


def _ints(tokens: List[str], lineno: int, what: str) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as e:
        raise OracleInputError(f"line {lineno}: invalid {what}: {' '.join(tokens)}") from e


def _parse_term(token: str, lineno: int) -> Tuple[Tuple[int, ...], int]:
    coeff, sep, exps = token.partition("@")
    if not sep:
        raise OracleInputError(f"line {lineno}: term '{token}' lacks '@'")
    try:
        flat = tuple(int(x) for block in exps.split(";") for x in block.split(","))
        return flat, int(coeff)
    except ValueError as e:
        raise OracleInputError(f"line {lineno}: malformed term '{token}'") from e


def load_instance(text: str) -> MorphismMatrix:
    header: Dict[str, List[str]] = {}
    entries: Dict[Tuple[int, int], Tuple[int, Dict[Tuple[int, ...], int]]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        if key in ("p", "dims", "rows", "cols"):
            header[key] = rest
        elif key == "entry":
            if len(rest) < 3:
                raise OracleInputError(f"line {lineno}: entry needs row, column and terms")
            i, j = _ints(rest[:2], lineno, "entry position")
            terms: Dict[Tuple[int, ...], int] = {}
            if rest[2:] != ["0"]:
                for token in rest[2:]:
                    exps, coeff = _parse_term(token, lineno)
                    terms[exps] = terms.get(exps, 0) + coeff
            entries[(i, j)] = (lineno, terms)
        else:
            raise OracleInputError(f"line {lineno}: unknown keyword '{key}'")

    missing = [k for k in ("p", "dims", "rows", "cols") if k not in header]
    if missing:
        raise OracleInputError(f"instance file lacks: {', '.join(missing)}")
    (p,) = _ints(header["p"], 0, "prime")
    dims = tuple(_ints(header["dims"], 0, "dims"))
    row_degrees = tuple(
        tuple(_ints(token.split(","), 0, "row degree")) for token in header["rows"]
    )
    (cols,) = _ints(header["cols"], 0, "cols")

    rows = []
    for i, deg in enumerate(row_degrees):
        row = []
        for j in range(cols):
            lineno, terms = entries.pop((i, j), (0, {}))
            try:
                row.append(MultiForm.from_dict(dims, deg, terms, p) if terms
                           else zero_form(dims, deg, p))
            except OracleInputError as e:
                raise OracleInputError(f"line {lineno}: {e}") from e
        rows.append(tuple(row))
    if entries:
        raise OracleInputError(f"entries outside the matrix: {sorted(entries)}")
    return MorphismMatrix(tuple(rows), row_degrees, dims, p)


def _format_exponents(exps: Tuple[int, ...], dims: Tuple[int, ...]) -> str:
    blocks, start = [], 0
    for n in dims:
        blocks.append(",".join(str(x) for x in exps[start:start + n + 1]))
        start += n + 1
    return ";".join(blocks)


def dump_instance(m: MorphismMatrix) -> str:
    lines = [
        "# chowkit instance",
        f"p {m.p}",
        "dims " + " ".join(str(n) for n in m.dims),
        "rows " + " ".join(",".join(str(x) for x in deg) for deg in m.row_degrees),
        f"cols {m.e}",
    ]
    for i, row in enumerate(m.entries):
        for j, form in enumerate(row):
            terms = " ".join(
                f"{c}@{_format_exponents(exps, m.dims)}" for exps, c in form.coeffs
            )
            lines.append(f"entry {i} {j} {terms or '0'}")
    return "\n".join(lines) + "\n"
