"""Rankers and unambiguous (interval) temporal logics over finite and lasso words."""

from .words import INF, START, Word, letter_at, alphabet_of, imaginary_of, lt_itl
from .rankers import (
    AtomicModality,
    Ranker,
    Step,
    X, Y, XL, YL, G, H, GL, HL,
    ranker,
    step_eval,
    eval_from,
    eval_outside,
    defined_on,
    alph_gamma,
    classify,
)
from .formulas import And, Atom, Bottom, Not, Or, Top, TOP, BOTTOM
from .tl import Mod, TLFragmentSpec, check_fragment, eval_at, ranker_formula, tl_spec
from .itl import First, Interval, Last, check_itl_fragment, eval_interval, is_future_formula
from .monomials import (
    AmbiguityWitness,
    Monomial,
    NoWitnessUpTo,
    check_unambiguous_bounded,
    delta2_condition,
    enumerate_factorizations,
    member,
)
from .fo import fo_eval, count_variable_names, is_sigma2_shape

__version__ = "0.1.0"
