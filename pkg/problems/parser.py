"""
Lector de archivos de problema

Gramática (una declaración por línea, '#' inicia comentario):
    p = <primo>
    vars = x, y, ...
    quotient = <poly> [, <poly> ...]          (opcional)
    ideal <nombre> = <poly> [, <poly> ...]
    emax = N | smax = N | max_gb_pairs = N | max_power = N | workers = N

Los polinomios admiten + - * ^, coeficientes enteros y paréntesis. El nombre
'm' queda reservado para el ideal maximal irrelevante.
"""
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from tokenize import TokenError
from typing import Dict, List, Optional, Tuple

from algebra.ideals import Ideal, QuotientContext
from config.settings import MAXIMAL_IDEAL_NAME
from core.errors import NotHomogeneousInput, NotPrime, ParseError
from core.polyring import PolyRing, Polynomial, is_prime

logger = logging.getLogger(__name__)

PARAM_KEYS = ("emax", "smax", "max_gb_pairs", "max_power", "workers")

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_ALLOWED = re.compile(r"[A-Za-z0-9_+\-*^()\s]")
_IDEAL_HEAD = re.compile(r"ideal\s+(\S+)$")


@dataclass(frozen=True)
class ProblemFile:
    """
    Problema ya validado, con los polinomios en forma canónica

    quotient e ideals guardan el texto canónico de cada generador, de modo
    que render_problem y parse_problem son inversos.
    """
    p: int
    variables: Tuple[str, ...]
    quotient: Tuple[str, ...] = ()
    ideals: Tuple[Tuple[str, Tuple[str, ...]], ...] = ()
    params: Tuple[Tuple[str, int], ...] = ()

    @property
    def ideal_map(self) -> Dict[str, Tuple[str, ...]]:
        return dict(self.ideals)

    @property
    def param_map(self) -> Dict[str, int]:
        return dict(self.params)

    def ring(self) -> PolyRing:
        return PolyRing.create(self.p, self.variables)

    def build_context(self) -> QuotientContext:
        ring = self.ring()
        gens = [parse_polynomial(text, ring) for text in self.quotient]
        return QuotientContext(ring, Ideal(ring, gens))

    def build_ideals(self, ctx: QuotientContext) -> Dict[str, Ideal]:
        ideals = {MAXIMAL_IDEAL_NAME: ctx.maximal_ideal()}
        for name, gens in self.ideals:
            ideals[name] = Ideal(ctx.ring, [parse_polynomial(text, ctx.ring) for text in gens])
        return ideals


def parse_polynomial(text: str, ring: PolyRing, line: int = 1, offset: int = 0) -> Polynomial:
    """
    Convierte una expresión a Polynomial sobre F_p

    Raises:
        ParseError: con la posición (línea, columna) del problema
    """
    from sympy import Poly, Symbol
    from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

    stripped = text.strip()
    if not stripped:
        raise ParseError("expresion vacia", line, offset + 1)
    for i, ch in enumerate(text):
        if not _ALLOWED.match(ch):
            raise ParseError(f"caracter no permitido {ch!r}", line, offset + i + 1)
    if "**" in text:
        raise ParseError("use '^' para potencias", line, offset + text.index("**") + 1)

    symbols = {name: Symbol(name) for name in ring.variables}
    try:
        expr = parse_expr(stripped, local_dict=dict(symbols),
                          transformations=standard_transformations + (convert_xor,),
                          evaluate=True)
    except (SyntaxError, TypeError, ValueError, TokenError) as error:
        column = getattr(error, "offset", None)
        lead = len(text) - len(text.lstrip())
        raise ParseError(f"expresion invalida: {stripped}", line,
                         offset + lead + (column or 1)) from error

    unknown = sorted(str(s) for s in getattr(expr, "free_symbols", set()) if str(s) not in symbols)
    if unknown:
        name = unknown[0]
        raise ParseError(f"variable desconocida '{name}'", line, offset + text.find(name) + 1)
    try:
        poly = Poly(expr, *symbols.values())
    except Exception as error:
        raise ParseError(f"no es un polinomio: {stripped}", line, offset + 1) from error
    if not poly.domain.is_ZZ:
        raise ParseError(f"coeficientes no enteros en {stripped}", line, offset + 1)
    terms = {tuple(int(x) for x in monom): int(coeff) for monom, coeff in poly.terms()}
    return Polynomial(ring, terms)


class ProblemParser:
    """
    Lector línea a línea de archivos de problema

    Valida el primo, las variables, la homogeneidad de cada generador y los
    nombres de ideales; todo error lleva línea y columna.
    """

    def __init__(self, debug: bool = False):
        self.debug = debug
        self._log_step = logger.info if debug else logger.debug

    def parse(self, text: str) -> ProblemFile:
        p: Optional[int] = None
        variables: Optional[Tuple[str, ...]] = None
        ring: Optional[PolyRing] = None
        quotient: List[str] = []
        ideals: Dict[str, Tuple[str, ...]] = {}
        params: Dict[str, int] = {}
        last_line = 0

        for number, raw in enumerate(text.splitlines(), start=1):
            last_line = number
            line = raw.split("#", 1)[0]
            if not line.strip():
                continue
            if "=" not in line:
                raise ParseError("se esperaba 'clave = valor'", number, len(line) - len(line.lstrip()) + 1)
            head, _, body = line.partition("=")
            key = head.strip()
            body_offset = len(head) + 1

            if key == "p":
                p = self._parse_prime(body, number, body_offset)
                ring = None
            elif key == "vars":
                variables = self._parse_variables(body, number, body_offset)
                ring = None
            elif key in PARAM_KEYS:
                params[key] = self._parse_int(body, number, body_offset, key)
            elif key == "quotient" or _IDEAL_HEAD.match(key):
                if p is None or variables is None:
                    raise ParseError("'p' y 'vars' deben declararse antes", number, 1)
                if ring is None:
                    ring = PolyRing.create(p, variables)
                gens = self._parse_generators(body, ring, number, body_offset)
                if key == "quotient":
                    quotient.extend(gens)
                else:
                    name = _IDEAL_HEAD.match(key).group(1)
                    column = raw.index(key) + len(key) - len(name) + 1
                    if not _IDENTIFIER.match(name):
                        raise ParseError(f"nombre de ideal invalido '{name}'", number, column)
                    if name == MAXIMAL_IDEAL_NAME:
                        raise ParseError(f"'{MAXIMAL_IDEAL_NAME}' es un nombre reservado", number, column)
                    if name in ideals:
                        raise ParseError(f"ideal '{name}' declarado dos veces", number, column)
                    ideals[name] = tuple(gens)
            else:
                raise ParseError(f"clave desconocida '{key}'", number, raw.index(key) + 1 if key else 1)

        if p is None:
            raise ParseError("falta la declaracion 'p = ...'", max(last_line, 1))
        if variables is None:
            raise ParseError("falta la declaracion 'vars = ...'", max(last_line, 1))

        problem = ProblemFile(
            p=p,
            variables=variables,
            quotient=tuple(quotient),
            ideals=tuple(ideals.items()),
            params=tuple(sorted(params.items())),
        )
        self._log_step(f"Problema leido: p={p}, vars={len(variables)}, "
                       f"{len(quotient)} relaciones, {len(ideals)} ideales")
        return problem

    def _parse_int(self, body: str, line: int, offset: int, key: str) -> int:
        value = body.strip()
        column = offset + len(body) - len(body.lstrip()) + 1
        if not re.fullmatch(r"-?\d+", value):
            raise ParseError(f"'{key}' debe ser un entero", line, column)
        return int(value)

    def _parse_prime(self, body: str, line: int, offset: int) -> int:
        value = self._parse_int(body, line, offset, "p")
        if not is_prime(value):
            raise NotPrime(f"{value} no es primo")
        return value

    def _parse_variables(self, body: str, line: int, offset: int) -> Tuple[str, ...]:
        names = []
        position = offset
        for piece in body.split(","):
            name = piece.strip()
            column = position + len(piece) - len(piece.lstrip()) + 1
            if not _IDENTIFIER.match(name):
                raise ParseError(f"nombre de variable invalido '{name}'", line, column)
            if name in names:
                raise ParseError(f"variable '{name}' repetida", line, column)
            names.append(name)
            position += len(piece) + 1
        return tuple(names)

    def _parse_generators(self, body: str, ring: PolyRing, line: int, offset: int) -> List[str]:
        gens = []
        for piece, start in split_top_level(body):
            poly = parse_polynomial(piece, ring, line, offset + start)
            if poly.is_zero():
                continue
            homogeneous, _ = poly.is_homogeneous()
            if not homogeneous:
                raise NotHomogeneousInput(f"linea {line}: {piece.strip()} no es homogeneo")
            gens.append(poly.to_str())
        return gens


def split_top_level(body: str) -> List[Tuple[str, int]]:
    """Divide por comas fuera de paréntesis; devuelve (trozo, posición inicial)"""
    pieces = []
    depth = 0
    start = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            pieces.append((body[start:i], start))
            start = i + 1
    pieces.append((body[start:], start))
    return pieces


def parse_problem(text: str, debug: bool = False) -> ProblemFile:
    return ProblemParser(debug=debug).parse(text)


def render_problem(problem: ProblemFile) -> str:
    lines = [f"p = {problem.p}", f"vars = {', '.join(problem.variables)}"]
    if problem.quotient:
        lines.append(f"quotient = {', '.join(problem.quotient)}")
    for name, gens in problem.ideals:
        lines.append(f"ideal {name} = {', '.join(gens)}")
    for key, value in problem.params:
        lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"


def load_problem(path, debug: bool = False) -> Tuple[ProblemFile, str]:
    """Lee el archivo como UTF-8; devuelve el problema y el texto original"""
    text = Path(path).read_text(encoding="utf-8")
    return parse_problem(text, debug), text


def build(problem: ProblemFile) -> Tuple[QuotientContext, Dict[str, Ideal]]:
    ctx = problem.build_context()
    return ctx, problem.build_ideals(ctx)

