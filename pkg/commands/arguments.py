# commands/arguments.py - argparse value types shared by the commands
import argparse
from typing import Tuple


def nonnegative_int(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {raw!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def positive_int(raw: str) -> int:
    value = nonnegative_int(raw)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def weight_labels(raw: str) -> Tuple[int, ...]:
    """'1,0,2' -> (1, 0, 2). Sign is checked by DominantWeight, not here."""
    try:
        return tuple(int(part) for part in raw.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {raw!r}") from None
