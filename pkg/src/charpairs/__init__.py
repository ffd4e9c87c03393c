"""Characteristic pairs and characteristic decomposition of polynomial systems."""

from .chardec import CharacteristicPair, Decomposition, char_dec
from .errors import (
    CertificateError,
    CharPairsError,
    ConstantPolynomialError,
    DecompositionAborted,
    InputError,
    ParseError,
    StructuralError,
)
from .groebner import GroebnerBasis, buchberger, radical_member, saturate
from .parsing import parse_polynomial, parse_system
from .polyring import Polynomial, VarOrdering
from .strongritt import ritt_cstar, strong_decomposition, strong_transform
from .triset import TriangularSet, prem, prem_chain, res_chain, sat_basis
from .verify import verify_decomposition, verify_gb, verify_pair
from .wchar import WCharSet, w_char_set

__all__ = [
    "CertificateError", "CharPairsError", "CharacteristicPair", "ConstantPolynomialError",
    "Decomposition", "DecompositionAborted", "GroebnerBasis", "InputError", "ParseError",
    "Polynomial", "StructuralError", "TriangularSet", "VarOrdering", "WCharSet",
    "buchberger", "char_dec", "parse_polynomial", "parse_system", "prem", "prem_chain",
    "radical_member", "res_chain", "ritt_cstar", "sat_basis", "saturate",
    "strong_decomposition", "strong_transform", "verify_decomposition", "verify_gb",
    "verify_pair", "w_char_set",
]
