"""Line-oriented text format for algebras, forms, and auxiliary map data.

Algebra files:

    # comment
    algebra <name>
    backend exact|complex
    dim_even <n>
    dim_odd <n>
    basis <l1> <l2> ...
    param <k> = <coeff>                       (optional, metadata only)
    bracket <a> <b> = <coeff> <label> [+ <coeff> <label> ...]
    form <a> <b> = <coeff>

Unspecified brackets and form entries are zero, and only one orientation of
each unordered pair may appear (the other is forced by graded antisymmetry or
supersymmetry).  Exact coefficients are fractions p/q, optionally with an
imaginary part written like 1/2+3/4i; the complex backend takes decimal
literals.  Parsing round-trips bit-exactly on the exact backend.

Auxiliary files reuse the same term syntax with the keywords map, psi, theta
and phi:

    map <src> = <coeff> <tgt> [+ ...]         images of basis vectors
    psi <gen> <src> = <coeff> <tgt> [+ ...]   action matrices, one per generator
    theta <a> <b> = <coeff> <c> [+ ...]       dual-coefficient cocycle values
    phi <a> <b> = <coeff> <c> [+ ...]         pairing values in the base algebra
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple

from .core import BilinearForm, LieSuperalgebra, StructureError
from .scalars import EXACT, ScalarParseError, backend_by_name


class ParseError(ValueError):
    def __init__(self, msg: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        self.msg = msg
        where = f"line {line}" + (f", col {col}" if col else "") if line else ""
        super().__init__(f"{where}: {msg}" if where else msg)


@dataclass
class AlgebraFile:
    name: str
    algebra: LieSuperalgebra
    form: Optional[BilinearForm]
    params: Dict[str, str] = field(default_factory=dict)


def _tokenize_terms(tokens, line_no, known, what):
    """Parse 'coeff label + coeff label ...' into {label: coeff-token}."""
    terms = {}
    chunks, current = [], []
    for t in tokens:
        if t == "+":
            chunks.append(current)
            current = []
        else:
            current.append(t)
    chunks.append(current)
    for chunk in chunks:
        if len(chunk) != 2:
            raise ParseError(
                f"{what}: each term must be '<coeff> <label>', got {' '.join(chunk) or '(empty)'}",
                line_no,
            )
        coeff, label = chunk
        if label not in known:
            raise ParseError(f"unknown basis label {label!r}", line_no)
        if label in terms:
            raise ParseError(f"label {label!r} repeated inside one value", line_no)
        terms[label] = coeff
    return terms


def parse(text: str, tol: float = None) -> AlgebraFile:
    name = None
    backend = None
    dim_even = dim_odd = None
    basis = None
    params: Dict[str, str] = {}
    brackets = {}
    form_entries = {}
    seen_pairs = {}
    seen_form = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        key = tokens[0]
        if key == "algebra":
            if len(tokens) != 2:
                raise ParseError("algebra line needs exactly one name", line_no)
            name = tokens[1]
        elif key == "backend":
            if len(tokens) != 2 or tokens[1] not in ("exact", "complex"):
                raise ParseError("backend must be 'exact' or 'complex'", line_no)
            kw = {"tol": tol} if (tokens[1] == "complex" and tol is not None) else {}
            backend = backend_by_name(tokens[1], **kw)
        elif key == "dim_even":
            dim_even = _int_field(tokens, line_no)
        elif key == "dim_odd":
            dim_odd = _int_field(tokens, line_no)
        elif key == "basis":
            basis = tokens[1:]
            if not basis:
                raise ParseError("basis line lists no labels", line_no)
        elif key == "param":
            if len(tokens) != 4 or tokens[2] != "=":
                raise ParseError("param line must read 'param <name> = <value>'", line_no)
            params[tokens[1]] = tokens[3]
        elif key == "bracket":
            _need_header(basis, dim_even, dim_odd, line_no)
            if len(tokens) < 5 or tokens[3] != "=":
                raise ParseError("bracket line must read 'bracket <a> <b> = <terms>'", line_no)
            a, b = tokens[1], tokens[2]
            for l in (a, b):
                if l not in basis:
                    raise ParseError(f"unknown basis label {l!r}", line_no)
            pair = frozenset((a, b)) if a != b else frozenset((a,))
            if pair in seen_pairs:
                raise ParseError(
                    f"both orientations of the pair ({a},{b}) given "
                    f"(first at line {seen_pairs[pair]}); graded antisymmetry fixes the reverse",
                    line_no,
                )
            seen_pairs[pair] = line_no
            terms = _tokenize_terms(tokens[4:], line_no, set(basis), "bracket")
            _check_parity(basis, dim_even, a, b, terms, line_no)
            brackets[(a, b)] = terms
        elif key == "form":
            _need_header(basis, dim_even, dim_odd, line_no)
            if len(tokens) != 5 or tokens[3] != "=":
                raise ParseError("form line must read 'form <a> <b> = <coeff>'", line_no)
            a, b = tokens[1], tokens[2]
            for l in (a, b):
                if l not in basis:
                    raise ParseError(f"unknown basis label {l!r}", line_no)
            pair = frozenset((a, b)) if a != b else frozenset((a,))
            if pair in seen_form:
                raise ParseError(
                    f"both orientations of the form pair ({a},{b}) given "
                    f"(first at line {seen_form[pair]}); supersymmetry fixes the reverse",
                    line_no,
                )
            seen_form[pair] = line_no
            form_entries[(a, b)] = tokens[4]
        else:
            raise ParseError(f"unknown directive {key!r}", line_no)

    if name is None:
        raise ParseError("missing 'algebra <name>' line")
    _need_header(basis, dim_even, dim_odd, 0)
    if backend is None:
        backend = EXACT
    if len(basis) != dim_even + dim_odd:
        raise ParseError(
            f"basis lists {len(basis)} labels but dim_even + dim_odd = {dim_even + dim_odd}"
        )
    even, odd = basis[:dim_even], basis[dim_even:]
    try:
        coerced_brackets = {
            pair: {l: backend.parse(tok) for l, tok in terms.items()}
            for pair, terms in brackets.items()
        }
        algebra = LieSuperalgebra.build(even, odd, coerced_brackets, backend)
    except ScalarParseError as exc:
        raise ParseError(str(exc)) from None
    except StructureError as exc:
        raise ParseError(str(exc)) from None
    form = None
    if form_entries:
        parity = _form_parity(algebra, form_entries, backend)
        try:
            coerced = {pair: backend.parse(tok) for pair, tok in form_entries.items()}
            form = BilinearForm.build(algebra.space, coerced, parity, backend)
        except ScalarParseError as exc:
            raise ParseError(str(exc)) from None
        except StructureError as exc:
            raise ParseError(str(exc)) from None
    return AlgebraFile(name=name, algebra=algebra, form=form, params=params)


def _form_parity(algebra, entries, backend) -> str:
    """Infer even/odd parity of the form from the block pattern of its entries."""
    sp = algebra.space
    mixed = same = 0
    for (a, b), tok in entries.items():
        try:
            val = backend.parse(tok)
        except ScalarParseError:
            continue
        if backend.is_zero(val):
            continue
        if sp.parity(sp.index(a)) == sp.parity(sp.index(b)):
            same += 1
        else:
            mixed += 1
    if mixed and same:
        raise ParseError("form entries mix the even and odd block patterns")
    return "odd" if mixed else "even"


def _int_field(tokens, line_no) -> int:
    if len(tokens) != 2 or not tokens[1].isdigit():
        raise ParseError(f"{tokens[0]} needs one non-negative integer", line_no)
    return int(tokens[1])


def _need_header(basis, dim_even, dim_odd, line_no):
    if basis is None or dim_even is None or dim_odd is None:
        raise ParseError("dim_even, dim_odd and basis must precede bracket/form lines", line_no)


def _check_parity(basis, dim_even, a, b, terms, line_no):
    par = {l: (0 if i < dim_even else 1) for i, l in enumerate(basis)}
    want = (par[a] + par[b]) % 2
    for l in terms:
        if par[l] != want:
            raise ParseError(
                f"parity violation: [{a},{b}] cannot have a {l}-component", line_no
            )


def emit(algebra: LieSuperalgebra, form: Optional[BilinearForm], name: str, params: Optional[Mapping[str, str]] = None) -> str:
    bk = algebra.backend
    sp = algebra.space
    out = [
        f"algebra {name}",
        f"backend {bk.name}",
        f"dim_even {sp.dim_even}",
        f"dim_odd {sp.dim_odd}",
        "basis " + " ".join(sp.labels),
    ]
    for k in sorted(params or {}):
        out.append(f"param {k} = {params[k]}")
    n = sp.dim
    for i in range(n):
        jstart = i + 1 if sp.parity(i) == 0 else i
        for j in range(jstart, n):
            v = algebra.c[i][j]
            terms = [
                f"{bk.format(x)} {sp.labels[k]}" for k, x in enumerate(v) if not bk.is_zero(x)
            ]
            if terms:
                out.append(f"bracket {sp.labels[i]} {sp.labels[j]} = " + " + ".join(terms))
    if form is not None:
        g = form.gram.entries
        for i in range(n):
            for j in range(i, n):
                if not bk.is_zero(g[i][j]):
                    out.append(f"form {sp.labels[i]} {sp.labels[j]} = {bk.format(g[i][j])}")
    return "\n".join(out) + "\n"


# -- auxiliary map/cocycle/pairing files ---------------------------------------------


@dataclass
class MapFile:
    images: Dict[str, Dict[str, str]] = field(default_factory=dict)  # map lines
    psi: Dict[str, Dict[str, Dict[str, str]]] = field(default_factory=dict)
    theta: Dict[Tuple[str, str], Dict[str, str]] = field(default_factory=dict)
    phi: Dict[Tuple[str, str], Dict[str, str]] = field(default_factory=dict)


def parse_mapfile(text: str, known_labels) -> MapFile:
    """Parse map/psi/theta/phi lines; labels are validated against known_labels."""
    known = set(known_labels)
    out = MapFile()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        key = tokens[0]
        if key == "map":
            if len(tokens) < 4 or tokens[2] != "=":
                raise ParseError("map line must read 'map <src> = <terms>'", line_no)
            out.images[tokens[1]] = _tokenize_terms(tokens[3:], line_no, known, "map")
        elif key == "psi":
            if len(tokens) < 5 or tokens[3] != "=":
                raise ParseError("psi line must read 'psi <gen> <src> = <terms>'", line_no)
            gen, src = tokens[1], tokens[2]
            out.psi.setdefault(gen, {})[src] = _tokenize_terms(tokens[4:], line_no, known, "psi")
        elif key in ("theta", "phi"):
            if len(tokens) < 5 or tokens[3] != "=":
                raise ParseError(f"{key} line must read '{key} <a> <b> = <terms>'", line_no)
            target = out.theta if key == "theta" else out.phi
            target[(tokens[1], tokens[2])] = _tokenize_terms(tokens[4:], line_no, known, key)
        else:
            raise ParseError(f"unknown directive {key!r}", line_no)
    return out
