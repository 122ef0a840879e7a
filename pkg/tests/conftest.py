import pytest
from hypothesis import settings as hypothesis_settings

from core.config import settings
from core.logging_system import cli_logger

hypothesis_settings.register_profile("exact", deadline=None, max_examples=100)
hypothesis_settings.load_profile("exact")


@pytest.fixture(autouse=True)
def reset_logging():
    """main() reconfigures loguru per call; every test starts and ends on the default sink."""
    cli_logger.setup_logger(settings.LOG_LEVEL)
    yield
    cli_logger.setup_logger(settings.LOG_LEVEL)
