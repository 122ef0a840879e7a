# commands/hilbert.py - Hilbert series of Grassmannian cones, the minimal orbit and arbitrary weights
from typing import Any, Dict

from commands.arguments import nonnegative_int, positive_int, weight_labels
from commands.router import CommandRouter, Option
from core.config import settings
from core.logging_system import ErrorCategory, log_and_handle_error
from core.models import OutputDocument, SeriesPayload, to_wire
from algebra.hilbert import hilbert_grassmannian, hilbert_highest_weight, hilbert_min_orbit
from algebra.root_weights import DominantWeight
from algebra.series import HilbertSeries, expand

router = CommandRouter(group="hilbert", group_help="Hilbert series numerator / (1-t)^D of a highest weight variety")

SHARED_OPTIONS = (
    Option.of("--expand", type=nonnegative_int, metavar="K", help="series order to print (default 2D)"),
    Option.of("--benchmark", action="store_true", help="skip the closed-form post-assertions"),
)


def _document(name: str, params: Dict[str, Any], series: HilbertSeries, args) -> OutputDocument:
    order = args.expand if args.expand is not None else settings.EXPANSION_FACTOR * series.pole_order
    expansion = expand(series, order)
    return OutputDocument(
        command=f"hilbert {name}",
        params=to_wire({**params, "expand": order}),
        format=args.format,
        result=to_wire({"degree": series.degree, "dimension": series.dimension}),
        pole_order=to_wire(series.pole_order),
        numerator=to_wire(list(series.h_vector)),
        series=SeriesPayload(order=order, coefficients=to_wire(list(expansion.coefficients))),
    )


def _contracts(args) -> bool:
    return settings.ASSERT_CONTRACTS and not args.benchmark


@router.command(
    "grassmannian",
    help="cone over Gr(d, n+d+1) in its Pluecker embedding",
    options=(
        Option.of("--d", type=positive_int, required=True, help="subspace dimension d"),
        Option.of("--n", type=nonnegative_int, required=True, help="codimension parameter n"),
    ) + SHARED_OPTIONS,
)
@log_and_handle_error(ErrorCategory.SYSTEM)
def grassmannian(args) -> OutputDocument:
    series = hilbert_grassmannian(args.d, args.n, check=_contracts(args))
    return _document("grassmannian", {"d": args.d, "n": args.n}, series, args)


@router.command(
    "minimal-orbit",
    help="closure of the minimal nilpotent orbit of sl_{n+1}",
    options=(Option.of("--n", type=positive_int, required=True, help="rank n"),) + SHARED_OPTIONS,
)
@log_and_handle_error(ErrorCategory.SYSTEM)
def minimal_orbit(args) -> OutputDocument:
    series = hilbert_min_orbit(args.n, check=_contracts(args))
    return _document("minimal-orbit", {"n": args.n}, series, args)


@router.command(
    "weight",
    help="highest weight orbit closure X_w for any nonzero dominant weight of A_m",
    options=(
        Option.of("--rank", type=positive_int, required=True, metavar="M", help="rank m of A_m"),
        Option.of("--weight", type=weight_labels, required=True, metavar="L1,..,LM", help="Dynkin labels"),
    ) + SHARED_OPTIONS,
)
@log_and_handle_error(ErrorCategory.SYSTEM)
def weight(args) -> OutputDocument:
    w = DominantWeight.of_rank(args.rank, args.weight)
    series = hilbert_highest_weight(w)
    return _document("weight", {"rank": args.rank, "weight": list(w.labels)}, series, args)
