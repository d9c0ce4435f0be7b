"""Newton polytopes of Schur and inflated symmetric Grothendieck polynomials: exact Ehrhart data,
reflexivity, and the integer decomposition property."""
from .ehrhart import (
    EhrhartPolynomial,
    HStarVector,
    count_dilate,
    ehrhart_polynomial,
    gorenstein_index,
    hstar,
    is_palindromic,
    is_unimodal,
)
from .errors import ConsistencyError, DegeneratePolytopeError, EnumerationLimitError, ValidationError
from .handles import PolytopeHandle
from .hstar_formulas import (
    bounded_compositions,
    hstar_near_hook,
    hstar_single_row,
    hstar_two_row_family,
)
from .idp import decompose_grothendieck, decompose_schur, idp_brute, ssyt_with_content
from .partitions import (
    Partition,
    dominates,
    dominating_sequence,
    in_A,
    make_partition,
    parse_partition,
    reduce_by_translation,
)
from .permutohedron import FacetInequality
from .reflexivity import (
    grothendieck_reflexive_classifier,
    interior_lattice_points,
    is_reflexive_geometric,
    schur_gorenstein_classifier,
    schur_reflexive_classifier,
)
from .symfun import (
    MonomialMap,
    Tableau,
    enumerate_ssyt,
    grothendieck_expansion,
    schur_expansion,
    skew_strict_fillings_count,
    snp_check,
)

__version__ = "0.1.0"
