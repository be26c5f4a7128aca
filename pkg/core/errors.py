"""
Jerarquía de errores del motor

Cada error lleva un código legible por máquina que la CLI escribe en el JSON.
"""
from typing import Any, Dict, Optional


class FInvariantError(Exception):
    """Error base del motor de invariantes"""
    code = "error"

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": str(self)}


class ZeroInverse(FInvariantError, ZeroDivisionError):
    code = "zero_inverse"


class RingMismatch(FInvariantError, ValueError):
    code = "ring_mismatch"


class ExponentOverflow(FInvariantError, OverflowError):
    code = "exponent_overflow"


class NotZeroDimensional(FInvariantError, ValueError):
    code = "not_zero_dimensional"


class DivisionByZeroGenerator(FInvariantError, ZeroDivisionError):
    code = "division_by_zero_generator"


class NotHomogeneous(FInvariantError, ValueError):
    code = "not_homogeneous"


class NotHomogeneousInput(NotHomogeneous):
    code = "not_homogeneous_input"


class NotInRadical(FInvariantError, ValueError):
    code = "not_in_radical"


class EmptyIdeal(FInvariantError, ValueError):
    code = "empty_ideal"


class UnitIdeal(FInvariantError, ValueError):
    code = "unit_ideal"


class NotFPure(FInvariantError, ValueError):
    code = "not_f_pure"


class NotSystemOfParameters(FInvariantError, ValueError):
    code = "not_system_of_parameters"


class NotCompleteIntersection(FInvariantError, ValueError):
    code = "not_complete_intersection"


class NotPrime(FInvariantError, ValueError):
    code = "not_prime"


class UnknownIdeal(FInvariantError, KeyError):
    code = "unknown_ideal"

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "ideal desconocido"


class SearchBudgetExceeded(FInvariantError, RuntimeError):
    """Un presupuesto (pares de Groebner, potencias, matrices) fue excedido"""
    code = "search_budget_exceeded"

    def __init__(self, budget: str, limit: int, detail: str = ""):
        self.budget = budget
        self.limit = limit
        message = f"presupuesto '{budget}' excedido (limite {limit})"
        if detail:
            message += f": {detail}"
        super().__init__(message)

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data.update({"budget": self.budget, "limit": self.limit})
        return data


class ParseError(FInvariantError, ValueError):
    """Error de sintaxis en un archivo de problema, con ubicación"""
    code = "parse_error"

    def __init__(self, message: str, line: int, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = f"linea {line}" + (f", columna {column}" if column is not None else "")
        super().__init__(f"{where}: {message}")

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data.update({"line": self.line, "column": self.column})
        return data
