# commands/catalan.py - Catalan numbers: classic, d-dimensional and per root system
from commands.arguments import nonnegative_int, positive_int
from commands.router import CommandRouter, Option
from core.logging_system import ComputationError, ErrorCategory, log_and_handle_error
from core.models import OutputDocument, to_wire
from algebra.combinatorics import RootSystemType, catalan_classic, catalan_ddim, catalan_weyl

router = CommandRouter()


@router.command(
    "catalan",
    help="Catalan number: Cat_n, the d-dimensional Cat^(d)_n, or Cat(X) of a root system",
    options=(
        Option.of("--n", type=nonnegative_int, help="index n (classic and --ddim)"),
        Option.of("--ddim", type=positive_int, metavar="D", help="dimension d of the d-dimensional family"),
        Option.of("--weyl-type", metavar="X", help="root system letter A-G"),
        Option.of("--rank", type=positive_int, help="rank of the root system"),
    ),
)
@log_and_handle_error(ErrorCategory.SYSTEM)
def catalan(args) -> OutputDocument:
    if args.weyl_type is not None:
        if args.rank is None or args.n is not None or args.ddim is not None:
            raise ComputationError("usage_error", ErrorCategory.USAGE, detail="--weyl-type takes --rank and nothing else")
        value = catalan_weyl(RootSystemType(args.weyl_type, args.rank))
        params = {"weyl_type": args.weyl_type.upper(), "rank": args.rank}
    elif args.n is None:
        raise ComputationError("usage_error", ErrorCategory.USAGE, detail="catalan needs --n or --weyl-type/--rank")
    elif args.rank is not None:
        raise ComputationError("usage_error", ErrorCategory.USAGE, detail="--rank needs --weyl-type")
    elif args.ddim is not None:
        value = catalan_ddim(args.ddim, args.n)
        params = {"ddim": args.ddim, "n": args.n}
    else:
        value = catalan_classic(args.n)
        params = {"n": args.n}

    return OutputDocument(command="catalan", params=to_wire(params), format=args.format, result=to_wire(value))
