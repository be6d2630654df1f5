"""Affine sl2 Mirkovic-Vilonen polytopes read off Littelmann paths."""

from . import _kernels
from .decorations import Zigzag, ZigzagReport, decorate, find_zigzags, read_partitions, zigzag_report
from .errors import AffmvError, ParseError, TheoremViolation, ValidationFailure
from .mvpoly import (
    LusztigDatum,
    MVPolytope,
    Partition,
    classify,
    complete_left,
    complete_right,
    cut_at_active_diagonal,
    delta_top_part,
    enumerate_mv,
    genpol_reduce,
    polytope_from_left,
    polytope_from_right,
    polytope_of_word,
    reconstruct_from_path,
    top_part,
    validate,
)
from .paths import (
    AFFINE,
    Crystal,
    Path,
    apply_fword,
    ddim,
    e,
    e_max,
    eps,
    f,
    f_max,
    generate_crystal,
    parse_fword,
    sections,
    straight_path,
)
from .rootdata import RealRoot, RootDatum, build_affine_sl2, build_finite
from .treefold import FoldedPath, ParameterSpace, build_folded, fold_plus, genericity, parameter_space, retract_step
from .upsilon import BottomData, bottom_vertices, upsilon, upsilon_prime

BACKEND = _kernels.BACKEND
__version__ = "0.1.0"
