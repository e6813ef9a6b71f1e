"""Exact Kazhdan-Lusztig combinatorics for affine Weyl groups and p-adic
valuations of tilting module dimensions."""

from .affine import AffineElement, AffineWeylGroup
from .antispherical import AntisphericalElement, ParabolicKLTable, tilting_character, verify_prop34
from .engine import CellReport, Engine, p_valuation, verify_main_theorem, weyl_polynomial
from .hecke import HeckeElement, KLTable, Parabolic, act_on_symmetric_power
from .laurent import LaurentPoly
from .polynomial import MultiPoly
from .rootsys import FiniteWeylElement, RootSystem, build_root_system

__version__ = "0.1.0"
