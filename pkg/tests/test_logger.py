import logging

import pytest

from skewcat.utils.logger import PACKAGE, log_execution, set_verbosity, setup_logger


class Collect(logging.Handler):
    def __init__(self):
        super().__init__(logging.DEBUG)
        self.messages = []

    def emit(self, record):
        self.messages.append((record.levelno, record.getMessage()))


class Named:
    name = "Ch3"


@pytest.fixture
def collected():
    root = logging.getLogger(PACKAGE)
    handler = Collect()
    root.addHandler(handler)
    level = root.level
    yield handler
    root.removeHandler(handler)
    root.setLevel(level)


def test_loggers_are_nested_under_the_package():
    assert setup_logger("skewcat.modules.normalize").name == "skewcat.modules.normalize"
    assert setup_logger("tests.helpers").name == "skewcat.tests.helpers"
    assert logging.getLogger(PACKAGE).propagate is False


@pytest.mark.parametrize("verbosity,level", [
    (-1, logging.WARNING), (0, logging.INFO), (1, logging.DEBUG), (5, logging.DEBUG), (-4, logging.WARNING),
])
def test_set_verbosity(collected, verbosity, level):
    assert set_verbosity(verbosity) == level
    assert logging.getLogger(PACKAGE).level == level


def test_log_execution_names_the_subject(collected):
    set_verbosity(0)

    @log_execution
    def check(c):
        return 7

    assert check(Named()) == 7
    messages = [m for _, m in collected.messages]
    assert messages[0] == "check on Ch3: started"
    assert messages[1].startswith("check on Ch3: done in ")


def test_log_execution_reraises(collected):
    @log_execution(level=logging.DEBUG)
    def broken():
        raise ValueError("no coequalizer")

    with pytest.raises(ValueError):
        broken()
    assert (logging.ERROR, "broken: ValueError: no coequalizer") in collected.messages
