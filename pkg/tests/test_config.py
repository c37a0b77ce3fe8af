"""
Tests for configuration management
"""

import pytest
import tempfile
from pathlib import Path

from reqlint.analyzer import RequirementAnalyzer
from reqlint.config import Config


class TestConfig:
    """Test Config manager"""

    def test_init(self):
        """Test configuration initialization"""
        config = Config()
        assert config.config is not None
        assert "engine" in config.config
        assert "analyses" in config.config
        assert "report" in config.config
        assert "logging" in config.config

    def test_get(self):
        """Test getting configuration values"""
        config = Config()

        # Get nested value
        assert config.get("engine.max_states") == 1000000
        assert config.get("engine.timeout") == 60.0

        # Get with default
        nonexistent = config.get("nonexistent.key", "default")
        assert nonexistent == "default"

    def test_set(self):
        """Test setting configuration values"""
        config = Config()

        # Set nested value
        config.set("engine.max_states", 5000)
        assert config.get("engine.max_states") == 5000

        # Set new value
        config.set("new.nested.value", 42)
        assert config.get("new.nested.value") == 42

    def test_defaults_not_shared(self):
        """Test that instances do not share the default mapping"""
        Config().set("engine.timeout", 1.0)
        assert Config().get("engine.timeout") == 60.0

    def test_save_and_load_yaml(self):
        """Test saving and loading YAML configuration"""
        config = Config()
        config.set("engine.max_states", 2000)

        with tempfile.TemporaryDirectory() as tmpdir:
            filepath = Path(tmpdir) / "reqlint.yaml"

            # Save
            success = config.save(str(filepath))
            assert success
            assert filepath.exists()

            # Load
            new_config = Config()
            success = new_config.load(str(filepath))
            assert success
            assert new_config.get("engine.max_states") == 2000

    def test_save_and_load_json(self):
        """Test saving and loading JSON configuration"""
        config = Config()
        config.set("analyses.verify_mus", True)

        with tempfile.TemporaryDirectory() as tmpdir:
            filepath = Path(tmpdir) / "config.json"

            # Save
            success = config.save(str(filepath))
            assert success
            assert filepath.exists()

            # Load
            new_config = Config()
            success = new_config.load(str(filepath))
            assert success
            assert new_config.get("analyses.verify_mus") is True

    def test_partial_file(self):
        """Test that a partial file keeps the other defaults"""
        with tempfile.TemporaryDirectory() as tmpdir:
            filepath = Path(tmpdir) / "reqlint.yaml"
            filepath.write_text("engine:\n  timeout: 5\n", encoding="utf-8")
            config = Config(str(filepath))
            assert config.get("engine.timeout") == 5
            assert config.get("engine.max_states") == 1000000

    @pytest.mark.parametrize("name, content", [
        ("missing.yaml", None),
        ("config.toml", "[engine]\n"),
        ("list.yaml", "- 1\n- 2\n"),
    ])
    def test_load_failures(self, name, content):
        """Test that unreadable files leave the defaults in place"""
        with tempfile.TemporaryDirectory() as tmpdir:
            filepath = Path(tmpdir) / name
            if content is not None:
                filepath.write_text(content, encoding="utf-8")
            config = Config()
            assert not config.load(str(filepath))
            assert config.to_dict() == Config.DEFAULT_CONFIG

    def test_to_dict(self):
        """Test converting configuration to dictionary"""
        config = Config()
        config_dict = config.to_dict()

        assert isinstance(config_dict, dict)
        assert "engine" in config_dict
        config_dict["engine"]["max_states"] = 1
        assert config.get("engine.max_states") == 1000000

    def test_analyzer_from_config(self):
        """Test that engine caps reach the analyzer"""
        config = Config()
        config.set("engine.max_states", 10)
        config.set("analyses.connectivity", False)
        analyzer = RequirementAnalyzer.from_config(config)
        assert analyzer.max_states == 10
        assert analyzer.timeout == 60.0
        assert not analyzer.connectivity

    @pytest.mark.parametrize("key, value", [
        ("engine.max_states", 0),
        ("engine.max_states", "many"),
        ("engine.timeout", -1),
        ("logging.level", "LOUD"),
    ])
    def test_validate(self, key, value):
        """Test that unusable caps and levels are reported"""
        config = Config()
        assert config.validate() == []
        config.set(key, value)
        problems = config.validate()
        assert len(problems) == 1
        assert key in problems[0]
