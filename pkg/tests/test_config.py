from argparse import Namespace
from pathlib import Path

import pytest

from ihcalc.cli.config import CliConfig
from ihcalc.core.types import FracOp, OutputFormat, SemanticsKind
from ihcalc.utils.config import AXIOM_RANDOM_DRAWS, DEFAULT_SEED, TheoryConfig, get_config_dir
from ihcalc.utils.exceptions import PreferenceError
from ihcalc.utils.helpers import read_source, strip_comment
from ihcalc.utils.prefs import DEFAULT_PREFS, load_prefs, save_prefs, set_pref


class TestPreferences:
    def test_defaults_without_file(self):
        assert load_prefs() == DEFAULT_PREFS

    def test_round_trip_merges_defaults(self):
        save_prefs({"seed": 5})
        prefs = load_prefs()
        assert prefs["seed"] == 5
        assert prefs["output_format"] == DEFAULT_PREFS["output_format"]

    def test_corrupted_file_falls_back(self, isolated_config_dir):
        isolated_config_dir.mkdir(parents=True)
        (isolated_config_dir / "prefs.json").write_text("{not json")
        assert load_prefs() == DEFAULT_PREFS

    def test_invalid_entries_are_dropped(self):
        save_prefs({"output_format": "yaml", "seed": "7", "workers": 0, "colour": True, "seed2": 1})
        assert load_prefs() == DEFAULT_PREFS

    def test_non_object_file_falls_back(self, isolated_config_dir):
        isolated_config_dir.mkdir(parents=True)
        (isolated_config_dir / "prefs.json").write_text("[1, 2]")
        assert load_prefs() == DEFAULT_PREFS

    def test_set_pref_parses_values(self):
        set_pref("seed", "-4")
        prefs = set_pref("output_format", "json")
        assert prefs == {"output_format": "json", "seed": -4, "workers": 1}
        assert load_prefs() == prefs

    @pytest.mark.parametrize("key, text", [("workers", "0"), ("seed", "1.5"), ("output_format", "xml"), ("depth", "3")])
    def test_set_pref_rejects(self, key, text):
        with pytest.raises(PreferenceError):
            set_pref(key, text)
        assert load_prefs() == DEFAULT_PREFS

    def test_config_dir_from_environment(self, isolated_config_dir):
        assert get_config_dir() == isolated_config_dir

    def test_xdg_fallback(self, tmp_path, monkeypatch):
        monkeypatch.delenv("IHCALC_CONFIG_DIR")
        monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path))
        assert get_config_dir() == Path(tmp_path) / "ihcalc"


class TestCliConfig:
    def namespace(self, **kwargs):
        base = dict(command="frac", inputs=["1/2", "2"], json_output=False, seed=None,
                    workers=None, op="mul")
        base.update(kwargs)
        return Namespace(**base)

    def test_preferences_fill_gaps(self):
        config = CliConfig.from_namespace(
            self.namespace(), {"output_format": "json", "seed": 11, "workers": 3}
        )
        assert config.json
        assert (config.seed, config.workers) == (11, 3)
        assert config.frac_op is FracOp.MUL
        assert config.inputs == ["1/2", "2"]

    def test_flags_override_preferences(self):
        config = CliConfig.from_namespace(
            self.namespace(seed=4, workers=2), {"seed": 11, "workers": 3}
        )
        assert (config.seed, config.workers) == (4, 2)
        assert config.output_format is OutputFormat.TEXT

    def test_defaults(self):
        config = CliConfig.from_namespace(Namespace(command="axioms"))
        assert config.seed == DEFAULT_SEED
        assert config.semantics is SemanticsKind.REL
        assert config.frac_op is None
        assert not (config.dual or config.cospan or config.json)

    def test_semantics_choice(self):
        config = CliConfig.from_namespace(Namespace(command="sem", semantics="cospan", dual=True))
        assert config.semantics is SemanticsKind.COSPAN
        assert config.dual

    def test_theory_config(self):
        config = CliConfig(command="axioms", seed=9, workers=4)
        theory = config.theory_config()
        assert (theory.seed, theory.workers) == (9, 4)
        assert theory.random_draws == AXIOM_RANDOM_DRAWS


class TestSmallPieces:
    def test_theory_config_defaults(self):
        config = TheoryConfig()
        assert config.scalars == [-3, -2, -1, 0, 1, 2, 3]
        assert config.seed == DEFAULT_SEED

    def test_output_format(self):
        assert OutputFormat.from_string("JSON") is OutputFormat.JSON
        assert OutputFormat.from_string("yaml") is OutputFormat.TEXT

    def test_read_source(self, tmp_path):
        path = tmp_path / "c.ih"
        path.write_text("dup ; add")
        assert read_source(str(path)) == "dup ; add"
        assert read_source("dup ; add") == "dup ; add"

    def test_strip_comment(self):
        assert strip_comment("1 2 # note") == "1 2 "
        assert strip_comment("1 2") == "1 2"
