# core/messages.py - Message catalog for diagnostics
from typing import Dict


class Messages:
    """Diagnostic message catalog keyed by message_key"""

    MESSAGES: Dict[str, str] = {
        # General
        "internal_error": "An unexpected internal error occurred: {error}",
        "usage_error": "Invalid usage: {detail}",
        "config_error": "Invalid configuration: {detail}",

        # Parameter validation
        "range_error": "{name} = {value} is out of range; expected {bounds}",
        "domain_error": "{detail}",
        "root_type_error": "{letter}{rank} is not an irreducible root system type; {detail}",
        "zero_weight": "A nontrivial highest weight is required, got the zero weight",
        "negative_label": "Dynkin labels must be nonnegative, got {labels}",
        "rank_mismatch": "Weight has rank {rank} but {count} labels were given",
        "root_out_of_range": "Root ({a}, {b}) does not lie in A_{rank}",
        "unknown_suite": "Unknown verification suite '{suite}'; known suites: {known}",
        "unknown_mode": "Unknown V_n representation '{mode}'; known modes: {known}",
        "unknown_family": "Unknown Narayana family '{family}'",

        # Exactness and invariants
        "integrality_violation": "{what} is not an integer: {value}",
        "invariant_violation": "Invariant violated in {what}: {detail}",
        "contract_violation": "{what} disagrees with its closed form: computed {computed}, expected {expected}",
        "pole_order_mismatch": "Pole order {pole_order} is too small for the stream: p_{pole_order} = {p_d}, p_{next_index} = {p_d1}",
        "insufficient_order": "Working order {working} leaves fewer than {needed} exact coefficients",

        # Verification
        "verification_failed": "{failed} of {total} checks failed",
        "grid_clamped": "{field} = {requested} exceeds HWV_MAX_GRID; clamped to {limit}",
    }

    @classmethod
    def get(cls, key: str, **kwargs) -> str:
        """
        Returns the formatted message for `key`

        Args:
            key: Message key
            **kwargs: Parameters substituted into the message

        Returns:
            str: Formatted message
        """
        if key not in cls.MESSAGES:
            return f"Message key '{key}' not found"

        message = cls.MESSAGES[key]

        try:
            return message.format(**kwargs)
        except KeyError as e:
            return f"Missing parameter {e} for message '{key}'"
