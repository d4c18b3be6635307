import json

from lingrowth.cli.writers import OutputWriter, read_csv
from lingrowth.config.constants import OutputFiles


def test_csv_starts_with_the_config_comment(out_dir):
    writer = OutputWriter(out_dir, "abc123", "0.1.0")
    path = writer.write_csv(OutputFiles.TRAJECTORY, [{"n": 0, "total_mass": 1.0}, {"n": 1, "total_mass": 2.0}])
    lines = path.read_text().splitlines()
    assert lines[0] == "# lingrowth 0.1.0 config=abc123"
    assert lines[1] == "n,total_mass"
    assert read_csv(path) == [{"n": "0", "total_mass": "1.0"}, {"n": "1", "total_mass": "2.0"}]
    assert writer.written == [str(path)]


def test_empty_csv_keeps_its_header(out_dir):
    path = OutputWriter(out_dir, "h", "v").write_csv(OutputFiles.CT_EVENTS, [], fieldnames=["t", "site"])
    assert path.read_text().splitlines() == ["# lingrowth v config=h", "t,site"]


def test_json_is_stamped_and_stable(out_dir):
    writer = OutputWriter(out_dir, "h", "v")
    first = writer.write_json(OutputFiles.ORACLE, {"b": 1, "a": [1, 2]}).read_bytes()
    second = writer.write_json(OutputFiles.ORACLE, {"a": [1, 2], "b": 1}).read_bytes()
    assert first == second
    payload = json.loads(first)
    assert payload["config_hash"] == "h"
    assert payload["version"] == "v"
    assert list(payload) == sorted(payload)
