"""Módulo de entrada/salida: archivos de problema y reportes"""
from .parser import ProblemFile, ProblemParser, load_problem, parse_polynomial, parse_problem, render_problem
from .report import ReportDocument, input_digest

__all__ = [
    'ProblemFile',
    'ProblemParser',
    'load_problem',
    'parse_polynomial',
    'parse_problem',
    'render_problem',
    'ReportDocument',
    'input_digest',
]
