# commands/dim.py - Weyl dimension of an irreducible sl_{m+1} representation
from commands.arguments import nonnegative_int, positive_int, weight_labels
from commands.router import CommandRouter, Option
from core.logging_system import ErrorCategory, log_and_handle_error
from core.models import OutputDocument, to_wire
from algebra.root_weights import DominantWeight
from algebra.weyl_dim import weyl_dim

router = CommandRouter()


@router.command(
    "dim",
    help="dim V_{k w} by the Weyl dimension formula",
    options=(
        Option.of("--rank", type=positive_int, required=True, metavar="M", help="rank m of A_m"),
        Option.of("--weight", type=weight_labels, required=True, metavar="L1,..,LM", help="Dynkin labels"),
        Option.of("--scale", type=nonnegative_int, default=1, metavar="K", help="multiple k of the weight"),
    ),
)
@log_and_handle_error(ErrorCategory.SYSTEM)
def dim(args) -> OutputDocument:
    weight = DominantWeight.of_rank(args.rank, args.weight)
    value = weyl_dim(weight.scale(args.scale))
    params = {"rank": args.rank, "weight": list(weight.labels), "scale": args.scale}
    return OutputDocument(command="dim", params=to_wire(params), format=args.format, result=to_wire(value))
