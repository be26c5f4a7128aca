"""
Documento de salida (JSON) y tabla de texto derivada

El JSON es la única salida de máquina: claves ordenadas, racionales como
"numerador/denominador" y los tiempos bajo una clave aparte, fuera de la
comparación de determinismo.
"""
import hashlib
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

import pandas as pd

from config.settings import TOOL_NAME, TOOL_VERSION
from core.errors import FInvariantError
from core.rationals import format_rational

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATED = 2


def input_digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _encode(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (set, frozenset, tuple)):
        return list(value)
    raise TypeError(f"valor no serializable: {type(value).__name__}")


@dataclass
class ReportDocument:
    command: str
    digest: str
    context: Dict[str, Any] = field(default_factory=dict)
    results: List[Dict[str, Any]] = field(default_factory=list)
    relations: List[Dict[str, Any]] = field(default_factory=list)
    errors: List[Dict[str, Any]] = field(default_factory=list)
    timing: Dict[str, float] = field(default_factory=dict)
    tool: str = TOOL_NAME
    version: str = TOOL_VERSION

    @property
    def has_violation(self) -> bool:
        return any(r.get("verdict") == "violated" for r in self.relations)

    @property
    def exit_code(self) -> int:
        if self.errors:
            return EXIT_ERROR
        if self.has_violation:
            return EXIT_VIOLATED
        return EXIT_OK

    def add_error(self, error: Exception) -> None:
        if isinstance(error, FInvariantError):
            self.errors.append(error.to_dict())
        else:
            self.errors.append({"code": type(error).__name__, "message": str(error)})

    def body(self) -> Dict[str, Any]:
        """Documento sin tiempos (lo que debe ser idéntico entre corridas)"""
        return {
            "tool": self.tool,
            "version": self.version,
            "command": self.command,
            "input_digest": self.digest,
            "context": self.context,
            "results": self.results,
            "relations": self.relations,
            "errors": self.errors,
        }

    def to_dict(self, with_timing: bool = True) -> Dict[str, Any]:
        data = self.body()
        if with_timing:
            data["timing"] = self.timing
        return data

    def to_json(self, with_timing: bool = True) -> str:
        return json.dumps(self.to_dict(with_timing), sort_keys=True, indent=2,
                          ensure_ascii=False, default=_encode)

    def to_table(self) -> str:
        """Tabla alineada derivada del JSON, una sección por resultado"""
        data = json.loads(self.to_json(with_timing=False))
        sections = []
        for result in data["results"]:
            title = f"== {result['op']} ({result.get('provenance', '')}) =="
            if result.get("rows"):
                frame = pd.DataFrame([_flatten(row) for row in result["rows"]])
            elif "interval" in result:
                frame = pd.DataFrame([{"lower": result["interval"][0], "upper": result["interval"][1]}])
            else:
                frame = pd.DataFrame([_flatten({"value": result.get("value")})])
            sections.append(title + "\n" + frame.to_string(index=False))
            if "interval" in result and result.get("rows"):
                sections.append(f"intervalo: [{result['interval'][0]}, {result['interval'][1]}]")
        if data["relations"]:
            frame = pd.DataFrame([{"relacion": r["name"], "veredicto": r["verdict"]}
                                  for r in data["relations"]])
            sections.append("== relaciones ==\n" + frame.to_string(index=False))
        if data["errors"]:
            frame = pd.DataFrame(data["errors"])
            sections.append("== errores ==\n" + frame.to_string(index=False))
        return "\n\n".join(sections) + "\n"


def _flatten(row: Dict[str, Any], prefix: str = "") -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    for key, value in row.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            out.update(_flatten(value, f"{name}."))
        elif isinstance(value, list):
            out[name] = ", ".join(str(v) for v in value)
        else:
            out[name] = value
    return out


def write_report(document: ReportDocument, path: Optional[str] = None) -> str:
    text = document.to_json()
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
        logger.info(f"Reporte guardado en: {path}")
    return text
