# middleware/rendering.py - plain / json / latex views of an OutputDocument
from typing import Callable, Dict, List, Sequence

from core.logging_system import ComputationError, ErrorCategory
from core.models import OutputDocument

FORMATS = ("plain", "json", "latex")


def _verify_lines(document: OutputDocument) -> List[str]:
    """One summary line per identity in first-seen order, then one line per failure."""
    counts: Dict[str, List[int]] = {}
    for report in document.reports or []:
        passed_failed = counts.setdefault(report.identity, [0, 0])
        passed_failed[0 if report.passed else 1] += 1
    lines = [f"{identity}: {p} passed, {f} failed" for identity, (p, f) in counts.items()]
    for report in document.failures:
        point = " ".join(f"{name}={value}" for name, value in report.point.items())
        lines.append(f"FAIL {report.identity} [{point}]: {report.left} != {report.right}")
    return lines


def render_plain(document: OutputDocument) -> str:
    if document.reports is not None:
        return "\n".join(_verify_lines(document))
    if document.numerator is not None:
        lines = [
            "numerator: " + " ".join(document.numerator),
            f"pole_order: {document.pole_order}",
        ]
        if document.series is not None:
            lines.append(f"series (order {document.series.order}): " + " ".join(document.series.coefficients))
        return "\n".join(lines)
    if isinstance(document.result, list):
        return " ".join(document.result)
    return str(document.result)


def render_json(document: OutputDocument) -> str:
    return document.model_dump_json(indent=2, exclude_none=True)


def _latex_term(coefficient: str, power: int) -> str:
    if power == 0:
        return coefficient
    variable = "t" if power == 1 else f"t^{{{power}}}"
    return variable if coefficient == "1" else f"{coefficient}{variable}"


def latex_fraction(numerator: Sequence[str], pole_order: str) -> str:
    """\\frac{1 + 3t + t^{2}}{(1-t)^{7}}; zero coefficients are omitted."""
    terms = [_latex_term(c, i) for i, c in enumerate(numerator) if c != "0"]
    return f"\\frac{{{' + '.join(terms) or '0'}}}{{(1-t)^{{{pole_order}}}}}"


def render_latex(document: OutputDocument) -> str:
    if document.numerator is not None:
        return latex_fraction(document.numerator, document.pole_order)
    if isinstance(document.result, list):
        return ", ".join(document.result)
    if document.reports is not None:
        return render_plain(document)
    return str(document.result)


RENDERERS: Dict[str, Callable[[OutputDocument], str]] = {
    "plain": render_plain,
    "json": render_json,
    "latex": render_latex,
}


def render(document: OutputDocument) -> str:
    renderer = RENDERERS.get(document.format)
    if renderer is None:
        raise ComputationError(
            "usage_error", ErrorCategory.USAGE, detail=f"unknown format '{document.format}'; known: {', '.join(FORMATS)}",
        )
    return renderer(document)
