"""Unit tests for the layered CLI configuration."""

import logging

from src.cli.config import CONFIG_FILENAME, Config


class TestConfigDefaults:
    """Tests for built-in defaults."""

    def test_defaults(self):
        """Test the values used when nothing is configured."""
        config = Config()

        assert config.steps == 512
        assert config.sweep_steps == 64
        assert config.real_tolerance == 1e-8
        assert config.zero_tolerance is None
        assert config.seed == 42
        assert config.workers == 1

    def test_to_dict(self):
        """Test the dictionary form lists every setting."""
        assert set(Config().to_dict()) == {
            "steps",
            "sweep_steps",
            "real_tolerance",
            "zero_tolerance",
            "seed",
            "workers",
            "log_level",
        }


class TestConfigLoading:
    """Tests for Config.load layering."""

    def test_explicit_file(self, temp_dir):
        """Test values from a YAML file."""
        path = temp_dir / "settings.yaml"
        path.write_text("steps: 128\nzero_tolerance: 1.0e-10\nworkers: 3\n")

        config = Config.load(str(path))

        assert config.steps == 128
        assert config.zero_tolerance == 1e-10
        assert config.workers == 3
        assert config.seed == 42

    def test_file_in_working_directory(self, temp_dir, monkeypatch):
        """Test .inertiadiag.yaml is picked up from the working directory."""
        (temp_dir / CONFIG_FILENAME).write_text("seed: 7\n")
        monkeypatch.chdir(temp_dir)

        assert Config.load().seed == 7

    def test_home_directory_fallback(self, temp_dir, monkeypatch):
        """Test the home directory file is used when the working directory has none."""
        home = temp_dir / "home"
        work = temp_dir / "work"
        home.mkdir()
        work.mkdir()
        (home / CONFIG_FILENAME).write_text("sweep_steps: 32\n")
        monkeypatch.setenv("HOME", str(home))
        monkeypatch.chdir(work)

        assert Config.load().sweep_steps == 32

    def test_environment_overrides_file(self, temp_dir, monkeypatch):
        """Test environment variables win over the file."""
        path = temp_dir / "settings.yaml"
        path.write_text("steps: 128\n")
        monkeypatch.setenv("INERTIADIAG_STEPS", "256")

        assert Config.load(str(path)).steps == 256

    def test_malformed_environment_value_ignored(self, temp_dir, monkeypatch, caplog):
        """Test a non-integer override keeps the previous value and warns."""
        monkeypatch.setenv("INERTIADIAG_WORKERS", "many")

        with caplog.at_level(logging.WARNING, logger="src.cli.config"):
            config = Config.load(str(temp_dir / "absent.yaml"))

        assert config.workers == 1
        assert "INERTIADIAG_WORKERS" in caplog.text

    def test_missing_explicit_file_uses_defaults(self, temp_dir):
        """Test a missing explicit file falls back to defaults."""
        config = Config.load(str(temp_dir / "absent.yaml"))

        assert config.steps == 512

    def test_invalid_yaml_ignored(self, temp_dir):
        """Test an unreadable file leaves the defaults in place."""
        path = temp_dir / "broken.yaml"
        path.write_text("steps: [unclosed\n")

        assert Config.load(str(path)).steps == 512
