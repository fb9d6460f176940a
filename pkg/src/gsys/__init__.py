"""Finite G-dynamical systems: magmas, coupling, dependence and causal atoms,
reducibility and emergence checks, and the ``.gsys`` query language."""
from .config import Config, ConfigSet, Team, enumerate_configs
from .coupling import GluingMap, couple, couple_glued, is_closed, star_set
from .magma import Magma, builtin_magma, make_magma
from .reduce import Cover, Decomposition, decide_reducible, verify_emergence
from .system import GSystem, compose, make_system, step, systems_equal, tabulate
from .verdict import Verdict

__version__ = "0.1.0"
