"""配置管理模块测试.

测试配置加载、验证和缓存功能。
"""

import os
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from medoidkit.infrastructure.config.settings import Settings, get_settings, reload_settings


class TestSettings:
    """测试应用配置类."""

    def test_default_values(self) -> None:
        """测试默认值."""
        with patch.dict(os.environ, {}, clear=True):
            settings = Settings(_env_file=None)

            assert settings.log_level == "INFO"
            assert settings.default_seed == 0
            assert settings.trimed_epsilon == 0.0
            assert settings.toprank_alpha_prime == 1.0
            assert settings.rand_epsilon == 0.05
            assert settings.trikmeds_max_iters == 10_000
            assert settings.sensor_radius_undirected == 1.25
            assert settings.sensor_radius_directed == 1.45
            assert settings.skewed_p_keep == 0.1
            assert settings.bound_check_tolerance == 1e-9

    def test_from_env(self) -> None:
        """测试从环境变量加载."""
        env_vars = {
            "MEDOIDKIT_LOG_LEVEL": "DEBUG",
            "MEDOIDKIT_DEFAULT_SEED": "42",
            "MEDOIDKIT_TRIKMEDS_EPSILON": "0.1",
            "MEDOIDKIT_SWEEP_WORKERS": "4",
        }

        with patch.dict(os.environ, env_vars, clear=True):
            settings = Settings(_env_file=None)

            assert settings.log_level == "DEBUG"
            assert settings.default_seed == 42
            assert settings.trikmeds_epsilon == 0.1
            assert settings.sweep_workers == 4

    def test_validation(self) -> None:
        """测试配置验证."""
        # 松弛因子为负
        with pytest.raises(ValidationError):
            Settings(_env_file=None, trimed_epsilon=-0.1)

        # 保留概率超出 (0, 1]
        with pytest.raises(ValidationError):
            Settings(_env_file=None, skewed_p_keep=1.5)

        # 并行线程数为 0
        with pytest.raises(ValidationError):
            Settings(_env_file=None, sweep_workers=0)

    def test_invalid_env_value(self) -> None:
        """测试环境变量取值非法."""
        with patch.dict(os.environ, {"MEDOIDKIT_TOPRANK_ALPHA_PRIME": "0"}, clear=True):
            with pytest.raises(ValidationError):
                Settings(_env_file=None)


class TestGetSettings:
    """测试配置缓存."""

    def test_get_settings_cached(self) -> None:
        """测试返回同一个实例."""
        get_settings.cache_clear()
        assert get_settings() is get_settings()

    def test_reload_settings(self) -> None:
        """测试重新加载."""
        with patch.dict(os.environ, {"MEDOIDKIT_DEFAULT_SEED": "7"}, clear=True):
            settings = reload_settings()
            assert settings.default_seed == 7

        reloaded = reload_settings()
        assert reloaded is not settings
        get_settings.cache_clear()
