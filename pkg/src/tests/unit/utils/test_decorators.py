import pytest

from lingrowth.exceptions import ConfigError, MassOverflowError, NoHeavyEntryError
from lingrowth.models.command_result import CommandResult, CommandStatus
from lingrowth.utils.decorators import command_guard


def _raising(exc):
    @command_guard()
    def command():
        raise exc

    return command


def test_results_pass_through():
    @command_guard()
    def command(value):
        return CommandResult(status=CommandStatus.SUCCESS, message=value)

    assert command("done").message == "done"


@pytest.mark.parametrize(
    "exc, status, code",
    [
        (ConfigError("bad horizon"), CommandStatus.CONFIG_ERROR, 1),
        (MassOverflowError("too big"), CommandStatus.NUMERICAL_GUARD, 2),
        (RuntimeError("boom"), CommandStatus.EXCEPTION, 2),
    ],
)
def test_exceptions_become_results(exc, status, code):
    result = _raising(exc)()
    assert result.status is status
    assert result.exit_code == code
    assert result.message == str(exc)
    assert result.exception.error_type == type(exc).__name__
    assert result.exception.traceback


def test_custom_status_map():
    @command_guard(status_map={NoHeavyEntryError: CommandStatus.INCONCLUSIVE})
    def command():
        raise NoHeavyEntryError("binary kernel")

    assert command().status is CommandStatus.INCONCLUSIVE


def test_reraise():
    @command_guard(reraise=[KeyError])
    def command():
        raise KeyError("kept")

    with pytest.raises(KeyError):
        command()


def test_exception_data_carries_config_location():
    result = _raising(ConfigError("Invalid JSON in run.json: Expecting value", line=2, column=5))()
    data = result.exception
    assert data.domain
    assert not data.numerical_guard
    assert (data.config_line, data.config_column) == (2, 5)
    assert data.origin.name == "command"


def test_exception_data_flags_guards_and_foreign_errors():
    guard = _raising(MassOverflowError("too big"))().exception
    assert guard.domain and guard.numerical_guard
    assert guard.config_line is None

    foreign = _raising(RuntimeError("boom"))().exception
    assert not foreign.domain
    assert not foreign.numerical_guard
