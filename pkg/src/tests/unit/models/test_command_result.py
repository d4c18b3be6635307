import json

from lingrowth.config.constants import ExitCode
from lingrowth.models.command_result import CommandResult, CommandStatus


def test_exit_codes():
    assert CommandStatus.SUCCESS.exit_code == ExitCode.OK
    assert CommandStatus.CONFIG_ERROR.exit_code == ExitCode.CONFIG_ERROR
    assert CommandStatus.NUMERICAL_GUARD.exit_code == ExitCode.NUMERICAL_GUARD
    assert CommandStatus.INCONCLUSIVE.exit_code == ExitCode.INCONCLUSIVE
    assert CommandStatus.EXCEPTION.exit_code == ExitCode.NUMERICAL_GUARD


def test_str_is_json_without_empty_fields():
    result = CommandResult(status=CommandStatus.SUCCESS, message="ok", payload={"rate": 0.5})
    payload = json.loads(str(result))
    assert payload == {"status": "Success", "message": "ok", "artifacts": [], "payload": {"rate": 0.5}}
