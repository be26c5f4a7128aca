"""
finvariants - Invariantes en característica positiva desde la línea de comandos

Flujo:
1. Lee y valida el archivo de problema (p, vars, quotient, ideales)
2. Construye R = S/I y los ideales con nombre
3. Ejecuta el comando pedido
4. Emite el documento JSON (o una tabla) y sale con 0 / 1 / 2

Uso:
    python main.py fedder data/quadric_cone_p3.txt
    python main.py threshold data/regular_plane_p5.txt --a m --J m --emax 2
    python main.py verify data/quadric_cone_p3.txt --emax 1 --table
    python main.py fsig data/quadric_cone_p3.txt --method gorenstein --sop sop
"""
import sys
import time
import logging
import argparse
from pathlib import Path
from typing import Optional

from algebra.calculus import clear_power_cache
from config import EngineConfig
from config.settings import COMMANDS, DEFAULT_E_MAX, DEFAULT_S_MAX, MAXIMAL_IDEAL_NAME, TOOL_VERSION
from finvariants.orchestrator import CommandParams, InvariantOrchestrator
from finvariants.purity import clear_splitting_cache
from problems.parser import parse_polynomial, parse_problem
from problems.report import ReportDocument, input_digest, write_report

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger(__name__)


class InvariantPipeline:
    """
    Pipeline completo de un comando

    Integra:
    - Lectura del problema
    - Configuración del motor (CLI > archivo > entorno > defaults)
    - Ejecución vía InvariantOrchestrator
    - Armado del documento de salida
    """

    def __init__(self, config: Optional[EngineConfig] = None, debug: bool = False):
        self.config = config or EngineConfig.from_env()
        self.debug = debug

        if debug:
            logging.getLogger().setLevel(logging.DEBUG)
            logger.debug("Modo DEBUG activado")

    def run(self, command: str, problem_text: str, a: str = MAXIMAL_IDEAL_NAME,
            J: str = MAXIMAL_IDEAL_NAME, c: Optional[str] = None, sop: Optional[str] = None,
            method: Optional[str] = None, e_max: Optional[int] = None, s_max: Optional[int] = None,
            a_top: Optional[int] = None, **engine_overrides) -> ReportDocument:
        """
        Ejecuta el comando y devuelve el documento

        Los errores del motor no se propagan: quedan registrados en
        document.errors y el código de salida pasa a 1.
        """
        document = ReportDocument(command=command, digest=input_digest(problem_text))
        started = time.perf_counter()
        try:
            logger.info("=" * 60)
            logger.info(f"INICIANDO {command.upper()} (finvariants {TOOL_VERSION})")
            logger.info("=" * 60)

            # PASO 1: Leer problema
            logger.info("PASO 1/3: Leyendo problema...")
            problem = parse_problem(problem_text, debug=self.debug)
            file_params = problem.param_map

            # PASO 2: Construir anillo e ideales
            logger.info("PASO 2/3: Construyendo anillo e ideales...")
            ctx = problem.build_context()
            ideals = problem.build_ideals(ctx)
            ideals.pop(MAXIMAL_IDEAL_NAME, None)
            document.context = ctx.describe()
            config = self.config.with_overrides(
                max_gb_pairs=file_params.get("max_gb_pairs"),
                max_power=file_params.get("max_power"),
                workers=file_params.get("workers"),
            ).with_overrides(**engine_overrides)
            logger.info(f"  > Anillo: {ctx}")
            logger.info(f"  > Ideales: {', '.join(sorted(ideals)) or '(solo m)'}")
            logger.info(f"  > Motor: {config}")
            document.timing["parse"] = round(time.perf_counter() - started, 6)

            params = CommandParams(
                a=a,
                J=J,
                sop=sop,
                c=parse_polynomial(c, ctx.ring) if c else None,
                method=method,
                e_max=_first(e_max, file_params.get("emax"), DEFAULT_E_MAX),
                s_max=_first(s_max, file_params.get("smax"), DEFAULT_S_MAX),
                a_top=a_top,
            )

            # PASO 3: Ejecutar comando
            logger.info(f"PASO 3/3: Ejecutando {command}...")
            orchestrator = InvariantOrchestrator(ctx, ideals, config, debug=self.debug)
            outcome = orchestrator.run(command, params)
            document.results = outcome.results
            document.relations = [r.to_dict() for r in outcome.relations]

            logger.info("=" * 60)
            if outcome.has_violation:
                logger.warning("COMANDO COMPLETADO CON RELACIONES VIOLADAS")
            else:
                logger.info("COMANDO COMPLETADO EXITOSAMENTE")
            logger.info("=" * 60)

        except Exception as e:
            logger.error(f"ERROR EN {command.upper()}: {e}", exc_info=self.debug)
            document.add_error(e)
        finally:
            clear_power_cache()
            clear_splitting_cache()

        document.timing["total"] = round(time.perf_counter() - started, 6)
        return document


def _first(*values):
    return next(v for v in values if v is not None)


def setup_logging(debug: bool = False, log_file: Optional[Path] = None) -> None:
    """stderr siempre (stdout queda para el JSON); archivo opcional"""
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.INFO,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='finvariants - umbrales F, ideales de escision y multiplicidades sobre F_p',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Ejemplos de uso:
  python main.py fedder data/quadric_cone_p3.txt
  python main.py nu data/regular_plane_p5.txt --emax 2
  python main.py threshold data/regular_plane_p5.txt --a m --J m --emax 2
  python main.py fpt data/quadric_cone_p3.txt --emax 1 --smax 1
  python main.py verify data/diagonal_p7_n8.txt --emax 1 --table
  python main.py witness data/xyz_p5.txt --c "x*y" --emax 1

Codigos de salida: 0 ok, 1 error, 2 relacion violada
        """
    )

    parser.add_argument('command', choices=COMMANDS, help='Comando a ejecutar')
    parser.add_argument('problem', type=Path, help='Archivo de problema')

    # Ideales y elementos
    parser.add_argument('--a', default=MAXIMAL_IDEAL_NAME, help='Ideal a (default: m)')
    parser.add_argument('--J', default=MAXIMAL_IDEAL_NAME, help='Ideal J (default: m)')
    parser.add_argument('--c', default=None, help='Elemento c para witness')
    parser.add_argument('--sop', default=None, help='Ideal sistema de parametros (fsig gorenstein)')
    parser.add_argument('--method', default=None,
                        help='fedder: auto|general; fsig: direct|gorenstein')
    parser.add_argument('--a-top', type=int, default=None,
                        help='a_d(R) declarado por el usuario (anillos no intersección completa)')

    # Niveles
    parser.add_argument('--emax', type=int, default=None, help=f'Nivel e maximo (default: {DEFAULT_E_MAX})')
    parser.add_argument('--smax', type=int, default=None, help=f'Nivel s maximo para fpt (default: {DEFAULT_S_MAX})')

    # Salida
    parser.add_argument('--json', action='store_true', help='Documento JSON por stdout (default)')
    parser.add_argument('--table', action='store_true', help='Tabla de texto en lugar de JSON')
    parser.add_argument('--out', type=Path, default=None, help='Guardar el JSON en un archivo')

    # Motor
    parser.add_argument('--workers', type=int, default=None, help='Workers para filas por e')
    parser.add_argument('--max-gb-pairs', type=int, default=None, help='Presupuesto de S-pares')
    parser.add_argument('--max-power', type=int, default=None, help='Maximo t en la escalera a^t')

    # Otros
    parser.add_argument('--debug', action='store_true', help='Activar modo debug (mas logs)')
    parser.add_argument('--log-file', type=Path, default=None, help='Archivo de log adicional')
    return parser


def main(argv=None) -> int:
    """Punto de entrada principal"""
    args = build_parser().parse_args(argv)
    setup_logging(args.debug, args.log_file)

    try:
        text = args.problem.read_text(encoding='utf-8')
    except (OSError, UnicodeDecodeError) as e:
        logger.error(f"No se pudo leer {args.problem}: {e}")
        document = ReportDocument(command=args.command, digest=input_digest(""))
        document.add_error(e)
        print(document.to_json())
        return document.exit_code

    pipeline = InvariantPipeline(EngineConfig.from_env(), debug=args.debug)
    document = pipeline.run(
        args.command,
        text,
        a=args.a,
        J=args.J,
        c=args.c,
        sop=args.sop,
        method=args.method,
        e_max=args.emax,
        s_max=args.smax,
        a_top=args.a_top,
        workers=args.workers,
        max_gb_pairs=args.max_gb_pairs,
        max_power=args.max_power,
    )

    if args.out:
        write_report(document, str(args.out))
    if args.table and not args.json:
        print(document.to_table())
    else:
        print(document.to_json())
    return document.exit_code


if __name__ == "__main__":
    sys.exit(main())
