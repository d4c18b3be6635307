import json

from lingrowth.config.utils import config_hash, json_serializer, stable_json
from lingrowth.logging import logger


def test_stable_json_sorts_keys():
    assert stable_json({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'


def test_config_hash_ignores_key_order():
    first = config_hash({"seed": 1, "horizon": 10})
    assert first == config_hash({"horizon": 10, "seed": 1})
    assert first != config_hash({"seed": 2, "horizon": 10})
    assert len(first) == 16
    int(first, 16)


def test_json_serializer_keeps_the_component():
    records = []
    sink = logger.add(lambda message: records.append(message.record), level="DEBUG")
    try:
        logger.bind(component="estimator").info("fitted")
    finally:
        logger.remove(sink)
    line = json.loads(json_serializer(records[0]))
    assert line["component"] == "estimator"
    assert line["message"] == "fitted"
    assert line["level"] == "INFO"
