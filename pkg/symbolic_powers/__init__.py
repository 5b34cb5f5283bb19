"""
Symbolic Powers - Main Package
"""

from .calculator import (
    Calculator, RunConfig, GensResult, BettiResult, SplitResult, SocleResult, SurveyResult
)
from .engine import (
    Monomial, MonomialIdeal, SimpleGraph, BettiTable, FieldSpec, Limits, LimitsFactory,
    ComputationLogger, SplitCertificate, EKVerdict, SymbolicError
)

__version__ = "1.0.0"

__all__ = [
    'Calculator', 'RunConfig', 'GensResult', 'BettiResult', 'SplitResult', 'SocleResult',
    'SurveyResult',
    'Monomial', 'MonomialIdeal', 'SimpleGraph', 'BettiTable', 'FieldSpec', 'Limits',
    'LimitsFactory', 'ComputationLogger', 'SplitCertificate', 'EKVerdict', 'SymbolicError'
]
