"""Buying a set of books across shops with threshold discounts.

Each shop s grants a discount d_s once the spend there reaches t_s; the
goal is one shop per book minimizing total cost.  The package bundles a
brute-force reference solver, exact solvers for structured regimes (few
books, few shops, degree-2 shops, unit prices), a greedy approximation
for fixed prices, hardness-flavoured instance generators, file formats,
and a CLI.
"""

from .approx import greedy_max_discount
from .bench import ALGORITHM_NAMES, run_algorithm, run_bench
from .errors import (
    BookUncovered,
    CleverShopperError,
    DanglingIndex,
    DeclaredCostMismatch,
    DegreeTooHigh,
    DuplicateOffer,
    EmptyInput,
    InfeasibleParameters,
    InputError,
    ItemCountMismatch,
    LiteralOccurrenceViolation,
    NegativeValue,
    NotExactly3Occurrences,
    NotFixedPrice,
    NotUnitPrice,
    OfferMissing,
    ParseError,
    ResourceLimitError,
    SearchSpaceTooLarge,
    StateSpaceTooLarge,
    TooManyBooks,
    TooManyShops,
    WeightSumMismatch,
)
from .exact import (
    Decision,
    StarDegreeBound,
    build_discount_graph,
    fstar_unit_price_min_cost,
    matching2_min_cost,
    max_fstar_subgraph,
    price_vector_dp,
    price_vector_min_cost,
    subset_dp_min_cost,
)
from .fileio import (
    CheckReport,
    check_solution,
    parse_dimacs,
    parse_graph,
    parse_instance,
    parse_solution,
    parse_weights,
    serialize_instance,
    serialize_solution,
)
from .matching import WeightedEdge, WeightedGraph, matching_weight, max_weight_matching
from .model import (
    Assignment,
    DiscountRule,
    Instance,
    Offer,
    SolveResult,
    cheapest_shop,
    discount_earned,
    evaluate_assignment,
    make_instance,
    min_price,
    validate_instance,
)
from .oracle import brute_force_max_discount, brute_force_min_cost
from .reductions import (
    DiscountModel,
    GeneratedInstance,
    from_bin_packing,
    from_max3sat,
    from_partition,
    from_perfect_code,
    random_instance,
    random_x3c,
    x3c_or_composition,
)
from .sources import (
    CnfFormula,
    SimpleGraph,
    X3CInstance,
    can_pack_bins,
    has_balanced_partition,
    has_neighborhood_packing,
    has_perfect_code,
    max_satisfied_clauses,
    packing_number,
    x3c_solvable,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHM_NAMES",
    "Assignment",
    "BookUncovered",
    "CheckReport",
    "CleverShopperError",
    "CnfFormula",
    "DanglingIndex",
    "Decision",
    "DeclaredCostMismatch",
    "DegreeTooHigh",
    "DiscountModel",
    "DiscountRule",
    "DuplicateOffer",
    "EmptyInput",
    "GeneratedInstance",
    "InfeasibleParameters",
    "InputError",
    "Instance",
    "ItemCountMismatch",
    "LiteralOccurrenceViolation",
    "NegativeValue",
    "NotExactly3Occurrences",
    "NotFixedPrice",
    "NotUnitPrice",
    "Offer",
    "OfferMissing",
    "ParseError",
    "ResourceLimitError",
    "SearchSpaceTooLarge",
    "SimpleGraph",
    "SolveResult",
    "StarDegreeBound",
    "StateSpaceTooLarge",
    "TooManyBooks",
    "TooManyShops",
    "WeightSumMismatch",
    "WeightedEdge",
    "WeightedGraph",
    "X3CInstance",
    "brute_force_max_discount",
    "brute_force_min_cost",
    "build_discount_graph",
    "can_pack_bins",
    "check_solution",
    "cheapest_shop",
    "discount_earned",
    "evaluate_assignment",
    "from_bin_packing",
    "from_max3sat",
    "from_partition",
    "from_perfect_code",
    "fstar_unit_price_min_cost",
    "greedy_max_discount",
    "has_balanced_partition",
    "has_neighborhood_packing",
    "has_perfect_code",
    "make_instance",
    "matching2_min_cost",
    "matching_weight",
    "max_fstar_subgraph",
    "max_satisfied_clauses",
    "max_weight_matching",
    "min_price",
    "packing_number",
    "parse_dimacs",
    "parse_graph",
    "parse_instance",
    "parse_solution",
    "parse_weights",
    "price_vector_dp",
    "price_vector_min_cost",
    "random_instance",
    "random_x3c",
    "run_algorithm",
    "run_bench",
    "serialize_instance",
    "serialize_solution",
    "subset_dp_min_cost",
    "validate_instance",
    "x3c_or_composition",
    "x3c_solvable",
]
