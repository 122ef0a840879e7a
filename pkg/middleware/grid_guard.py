# middleware/grid_guard.py - Caps verification grids in constrained environments
from typing import Dict, Optional

from core.config import settings
from core.logging_system import ComputationError, ErrorCategory, cli_logger
from core.models import SuiteRanges


class GridGuard:
    """Clamps every requested grid bound to HWV_MAX_GRID."""

    def __init__(self, raw_limit: Optional[str] = settings.MAX_GRID):
        self.raw_limit = raw_limit

    @property
    def limit(self) -> Optional[int]:
        raw = self.raw_limit
        if raw is None or raw.strip() == "":
            return None
        try:
            value = int(raw)
        except ValueError:
            raise ComputationError(
                "config_error", ErrorCategory.CONFIG, detail=f"HWV_MAX_GRID must be a positive integer, got {raw!r}",
            ) from None
        if value < 1:
            raise ComputationError(
                "config_error", ErrorCategory.CONFIG, detail=f"HWV_MAX_GRID must be a positive integer, got {raw!r}",
            )
        return value

    def clamp(self, ranges: SuiteRanges, defaults: Dict[str, Optional[int]]) -> SuiteRanges:
        """Fills suite defaults and caps them; unset bounds stay unset when no cap applies."""
        limit = self.limit
        if limit is None:
            return ranges

        updates = {}
        for name, effective in ranges.resolve(defaults).items():
            field = SuiteRanges.base_field(name)
            if effective is not None and effective > limit and field not in updates:
                cli_logger.log_grid_clamp(field, effective, limit)
                updates[field] = limit
        return ranges.model_copy(update=updates) if updates else ranges


grid_guard = GridGuard()
