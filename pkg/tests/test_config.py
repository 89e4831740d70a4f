import pytest

from cubicaudit.config import Config


def test_defaults():
    c = Config()
    assert (c.max_depth, c.height, c.rewrite_box, c.output, c.workers) == (12, 10_000, 3, "json", 1)


def test_env_then_overrides():
    env = {"CUBICAUDIT_HEIGHT": "50", "CUBICAUDIT_OUTPUT": "table", "CUBICAUDIT_SEED": "9"}
    c = Config.from_env(env)
    assert (c.height, c.output, c.seed) == (50, "table", 9)
    c = Config.from_env(env, height=70, seed=None)
    assert (c.height, c.seed) == (70, 9)


@pytest.mark.parametrize("kw", [{"max_depth": 0}, {"height": -1}, {"output": "xml"}, {"seed": -3}])
def test_validation(kw):
    with pytest.raises(ValueError):
        Config(**kw)


def test_json_excludes_presentation():
    assert set(Config().to_json()) == {"max_depth", "height", "rewrite_box", "seed"}
    assert Config().with_(height=5).height == 5
