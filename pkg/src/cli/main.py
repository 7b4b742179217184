"""
bigcell CLI - 배치 질의 진입점

    python app.py snat gcd "2^inf*3" "2^2*5"
    python app.py cover check --base 2 --gens 12 --patch multiples:"2^inf*3^inf"
    python app.py poset embed chain3.poset

Exit codes: 0 success, 1 domain error, 2 parse or usage error. Results go to
stdout, logs and errors to stderr.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from config.logging_config import setup_logging
from config.settings import settings
from src.bigcell import (
    Sieve,
    finite_subcover,
    is_cover,
    is_trivializing_zariski,
    parse_sieve,
    point_certificate,
    tower_supernatural,
)
from src.cli.formatting import emit, emit_error
from src.core.errors import BigCellError, DomainError, ParseError, VerificationError
from src.core.supernat import (
    divides,
    factor_natural,
    gcd,
    is_completely_infinite,
    lcm,
    parse_supernatural,
)
from src.oracle.universe import naive_cover, universe_from_settings
from src.poset import embed_poset, parse_poset, verify_embedding
from src.spectral import (
    cofinal_chain,
    is_empty,
    member,
    parse_patch,
    relevant_primes,
    trace_nonempty_witness,
)
from src.tower import (
    AlgebraEmbedding,
    PglElement,
    check_representation,
    normalized_trace,
    parse_matrix,
    parse_presentation,
    pgl_equiv_n,
    push_assignment,
    skolem_noether_conjugator,
    standard_embedding,
)

logger = logging.getLogger(__name__)


# =============================================================================
# ARGUMENT HELPERS
# =============================================================================


def _read(value: str) -> str:
    """'@path' reads a file, '-' reads stdin, anything else is literal text"""
    if value == "-":
        return sys.stdin.read()
    if value.startswith("@"):
        return _read_file(value[1:])
    return value


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}")


def _naturals(text: str) -> List[int]:
    values = []
    offset = 0
    for piece in text.split(","):
        if piece.strip():
            if not (piece.strip().isascii() and piece.strip().isdigit()) or int(piece) < 1:
                raise ParseError("bad natural number", text, offset, "positive integer")
            values.append(int(piece))
        offset += len(piece) + 1
    return values


def _natural(text: str) -> int:
    values = _naturals(text)
    if len(values) != 1:
        raise ParseError("expected one natural number", text, 0, "positive integer")
    return values[0]


def _sieve(args) -> Sieve:
    if args.sieve:
        return parse_sieve(args.sieve)
    if args.base is None:
        raise ParseError("missing sieve", "", None, "--sieve or --base with --gens")
    return Sieve(_natural(args.base), tuple(_naturals(args.gens or "")))


# =============================================================================
# HANDLERS
# =============================================================================


def _snat(args):
    a = parse_supernatural(args.a)
    if args.op == "cinf":
        return is_completely_infinite(a)
    if args.b is None:
        raise ParseError(f"'snat {args.op}' needs two values", args.a, None, "second literal")
    b = parse_supernatural(args.b)
    return {"gcd": gcd, "lcm": lcm, "divides": divides}[args.op](a, b)


def _patch(args):
    S = parse_patch(_read(args.patch))
    if args.op == "member":
        if args.value is None:
            raise ParseError("'patch member' needs a value", "", None, "supernatural literal")
        return member(parse_supernatural(args.value), S)
    if args.op == "empty":
        return is_empty(S)
    base = _natural(args.base) if args.base else 1
    return trace_nonempty_witness(base, S, _naturals(args.exclude or ""))


def _cover(args):
    S = parse_patch(_read(args.patch))
    L = _sieve(args)
    if args.op == "subcover":
        return finite_subcover(L, S)
    result = is_cover(L, S)
    if args.cross_check:
        universe = universe_from_settings(args.universe_primes, args.universe_exp, args.widened)
        mentioned = relevant_primes(S) | {p for n in (L.base,) + L.generators for p, _ in factor_natural(n)}
        outside = mentioned - set(universe.primes)
        if outside:
            raise DomainError(f"primes {sorted(outside)} lie outside the universe {universe}")
        expected = naive_cover(L.base, L.generators, S, universe)
        if expected != result:
            raise VerificationError(f"solver says {result}, oracle over {universe} says {expected}")
        logger.info(f"oracle over {universe} agrees")
    return result


def _point(args):
    return point_certificate(parse_supernatural(args.value), parse_patch(_read(args.patch)))


def _triv(args):
    return is_trivializing_zariski(parse_patch(_read(args.patch)))


def _poset(args):
    P = parse_poset(_read_file(args.file) if args.file != "-" else sys.stdin.read())
    E = embed_poset(P)
    if not verify_embedding(P, E):
        raise VerificationError("embedding failed its own check")
    return E


def _tower(args):
    if args.op == "snat":
        return tower_supernatural(_naturals(args.chain), args.ratio)
    return cofinal_chain(parse_supernatural(args.value), args.k)


def _mat(args):
    if args.op == "embed":
        return standard_embedding(parse_matrix(args.matrix), args.to)
    if args.op == "trace":
        return normalized_trace(parse_matrix(args.matrix))
    if args.op == "conj":
        phi = AlgebraEmbedding.standard(args.n, args.m)
        psi = AlgebraEmbedding.standard(args.n, args.m)
        if args.phi_conj:
            phi = phi.conjugated(parse_matrix(args.phi_conj))
        if args.psi_conj:
            psi = psi.conjugated(parse_matrix(args.psi_conj))
        return skolem_noether_conjugator(phi, psi)
    if args.op == "equivn":
        g = PglElement.of(parse_matrix(args.g))
        h = PglElement.of(parse_matrix(args.h))
        return pgl_equiv_n(g, h, args.n)
    R = parse_presentation(_read(args.presentation))
    assignment = {}
    for item in args.assign or []:
        name, sep, matrix = item.partition("=")
        if not sep:
            raise ParseError("bad assignment", item, len(item), "'name=matrix'")
        assignment[name.strip()] = parse_matrix(matrix)
    if args.push:
        assignment = push_assignment(assignment, args.push)
    return check_representation(R, assignment)


# =============================================================================
# PARSER
# =============================================================================


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON 출력")
    common.add_argument(
        "--universe-primes",
        type=lambda text: [int(p) for p in text.split(",") if p.strip()],
        default=argparse.SUPPRESS,
        help="oracle universe primes, e.g. 2,3,5",
    )
    common.add_argument("--universe-exp", type=int, default=argparse.SUPPRESS, help="oracle max exponent E")
    common.add_argument(
        "--widened",
        action="store_true",
        default=argparse.SUPPRESS,
        help="oracle also covers SpecZ and default=inf (stand-in prime)",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="bigcell",
        description="Supernatural numbers, patches of 𝕊 and the topologies K_S on the big cell",
        parents=[common],
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    snat = verbs.add_parser("snat", help="supernatural arithmetic", parents=[common])
    snat.add_argument("op", choices=["gcd", "lcm", "divides", "cinf"])
    snat.add_argument("a")
    snat.add_argument("b", nargs="?")
    snat.set_defaults(handler=_snat)

    patch = verbs.add_parser("patch", help="patch membership and emptiness", parents=[common])
    patch.add_argument("op", choices=["member", "empty", "witness"])
    patch.add_argument("value", nargs="?", help="supernatural literal (member)")
    patch.add_argument("--patch", required=True, help="patch expression, '@file' or '-'")
    patch.add_argument("--base", help="n for witness (default 1)")
    patch.add_argument("--exclude", help="excluded multiples m1,m2,...")
    patch.set_defaults(handler=_patch)

    cover = verbs.add_parser("cover", help="K_S covering judgment", parents=[common])
    cover.add_argument("op", choices=["check", "subcover"])
    cover.add_argument("--patch", required=True)
    cover.add_argument("--base")
    cover.add_argument("--gens")
    cover.add_argument("--sieve", help="'base:n gens:m1,m2'")
    cover.add_argument("--cross-check", action="store_true", help="also run the brute-force oracle")
    cover.set_defaults(handler=_cover)

    point = verbs.add_parser("point", help="point certificates", parents=[common])
    point.add_argument("op", choices=["check"])
    point.add_argument("value")
    point.add_argument("--patch", required=True)
    point.set_defaults(handler=_point)

    triv = verbs.add_parser("triv", help="trivializing criterion", parents=[common])
    triv.add_argument("op", choices=["zariski"])
    triv.add_argument("--patch", required=True)
    triv.set_defaults(handler=_triv)

    poset = verbs.add_parser("poset", help="finite poset embedding", parents=[common])
    poset.add_argument("op", choices=["embed"])
    poset.add_argument("file", help="poset document ('-' for stdin)")
    poset.set_defaults(handler=_poset)

    tower = verbs.add_parser("tower", help="towers and cofinal chains", parents=[common])
    tower.add_argument("op", choices=["snat", "chain"])
    tower.add_argument("value", nargs="?", help="supernatural literal (chain)")
    tower.add_argument("--chain", help="n_1,n_2,... (snat)")
    tower.add_argument("--ratio", type=int, help="geometric tail ratio (snat)")
    tower.add_argument("--k", type=int, default=6, help="chain length (chain)")
    tower.set_defaults(handler=_tower)

    mat = verbs.add_parser("mat", help="tower matrices and PGL stages", parents=[common])
    mat.add_argument("op", choices=["embed", "trace", "conj", "equivn", "rep"])
    mat.add_argument("matrix", nargs="?", help="matrix 'a,b;c,d' (embed, trace)")
    mat.add_argument("--to", type=int, help="target stage m (embed)")
    mat.add_argument("--n", type=int, help="source stage n (conj, equivn)")
    mat.add_argument("--m", type=int, help="target stage m (conj)")
    mat.add_argument("--phi-conj", help="conjugate phi = ρ by this matrix (conj)")
    mat.add_argument("--psi-conj", help="conjugate psi = ρ by this matrix (conj)")
    mat.add_argument("--g", help="stage matrix g (equivn)")
    mat.add_argument("--h", help="stage matrix h (equivn)")
    mat.add_argument("--presentation", help="presentation text, '@file' or '-' (rep)")
    mat.add_argument("--assign", action="append", help="generator=matrix (rep), repeatable")
    mat.add_argument("--push", type=int, help="push the assignment along ρ to this stage first (rep)")
    mat.set_defaults(handler=_mat)

    return parser


_REQUIRED: Dict[str, Dict[str, Sequence[str]]] = {
    "tower": {"snat": ["chain"], "chain": ["value"]},
    "mat": {
        "embed": ["matrix", "to"],
        "trace": ["matrix"],
        "conj": ["n", "m"],
        "equivn": ["g", "h", "n"],
        "rep": ["presentation"],
    },
}


def _check_required(parser: argparse.ArgumentParser, args):
    for name in _REQUIRED.get(args.verb, {}).get(args.op, []):
        if getattr(args, name, None) is None:
            parser.error(f"{args.verb} {args.op} needs {name}")


# =============================================================================
# ENTRY POINTS
# =============================================================================


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, dispatch, print; returns the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_required(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)

    as_json = getattr(args, "json", False)
    args.universe_primes = getattr(args, "universe_primes", None)
    args.universe_exp = getattr(args, "universe_exp", None)
    args.widened = getattr(args, "widened", None)
    handler: Callable = args.handler
    try:
        result = handler(args)
    except ParseError as exc:
        emit_error(exc, as_json)
        return 2
    except BigCellError as exc:
        emit_error(exc, as_json)
        return 1
    emit(result, as_json)
    return 0


def main() -> int:
    setup_logging(settings.LOG_LEVEL, settings.LOG_DIR, solver_debug=settings.DEBUG)
    return run(sys.argv[1:])
