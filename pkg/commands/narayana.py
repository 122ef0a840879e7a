# commands/narayana.py - Rows of the Narayana families
from commands.arguments import nonnegative_int, positive_int
from commands.router import CommandRouter, Option
from core.logging_system import ComputationError, ErrorCategory, log_and_handle_error
from core.models import OutputDocument, to_wire
from algebra.combinatorics import NarayanaFamily, narayana_row

router = CommandRouter()


def _family(root_type, ddim) -> NarayanaFamily:
    if ddim is None:
        return NarayanaFamily(root_type) if root_type else NarayanaFamily.CLASSIC
    if root_type == "B":
        raise ComputationError("usage_error", ErrorCategory.USAGE, detail="--ddim combines with --type A only")
    return NarayanaFamily.DDIM_A if root_type == "A" else NarayanaFamily.DDIM


@router.command(
    "narayana",
    help="One row of Narayana numbers; with --ddim and --type A the Grassmannian h-vector",
    options=(
        Option.of("--type", dest="root_type", choices=("A", "B"), help="root-system family"),
        Option.of("--ddim", type=positive_int, metavar="D", help="dimension d of the d-dimensional family"),
        Option.of("--row", type=nonnegative_int, required=True, metavar="N", help="row index n"),
    ),
)
@log_and_handle_error(ErrorCategory.SYSTEM)
def narayana(args) -> OutputDocument:
    family = _family(args.root_type, args.ddim)
    row = narayana_row(family, args.row, args.ddim)
    params = {"family": family.value, "row": args.row, "ddim": args.ddim}
    return OutputDocument(
        command="narayana",
        params=to_wire(params),
        format=args.format,
        result=to_wire(list(row.coefficients)),
    )
