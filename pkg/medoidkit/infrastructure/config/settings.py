"""应用配置管理模块.

配置加载顺序：
1. 环境变量（前缀 ``MEDOIDKIT_``，优先级最高）
2. 本地 .env 文件
3. 字段默认值

算法入口函数只接收显式参数，不直接读取全局配置；配置仅用于 CLI 和基准测试的默认值。

使用示例:
    ```python
    from medoidkit.infrastructure.config.settings import get_settings

    settings = get_settings()
    print(settings.toprank_alpha_prime)
    ```
"""

import logging
from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    """应用配置.

    Attributes:
        log_level: 日志级别
        log_file: 日志文件路径（可选）

        default_seed: 默认随机种子

        trimed_epsilon: trimed 松弛因子默认值
        toprank_alpha_prime: TOPRANK 阈值参数 α′
        toprank_anchor_constant: TOPRANK 锚点数常数 q
        rand_epsilon: RAND 求 medoid 时的目标相对误差

        trikmeds_epsilon: trikmeds 松弛因子默认值
        trikmeds_max_iters: K-medoids 最大迭代次数

        sensor_radius_undirected: 无向传感器图半径常数
        sensor_radius_directed: 有向传感器图半径常数
        sensor_max_retries: 传感器图连通性重试次数上限
        skewed_p_keep: 偏斜球内层保留概率

        sweep_workers: 扫描实验并行线程数
        bound_check_tolerance: --check-bounds 时边界检查的相对容差
    """

    model_config = SettingsConfigDict(
        env_prefix="MEDOIDKIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
        env_ignore_empty=True,
    )

    # 日志
    log_level: str = Field(default="INFO", description="日志级别")
    log_file: Optional[str] = Field(default=None, description="日志文件路径")

    default_seed: int = Field(default=0, ge=0, description="默认随机种子")

    # medoid 算法
    trimed_epsilon: float = Field(default=0.0, ge=0.0, description="trimed 松弛因子")
    toprank_alpha_prime: float = Field(default=1.0, gt=0.0, description="TOPRANK 阈值参数 α′")
    toprank_anchor_constant: float = Field(default=1.0, gt=0.0, description="TOPRANK 锚点数常数 q")
    rand_epsilon: float = Field(default=0.05, gt=0.0, description="RAND 目标相对误差")

    # K-medoids
    trikmeds_epsilon: float = Field(default=0.0, ge=0.0, description="trikmeds 松弛因子")
    trikmeds_max_iters: int = Field(default=10_000, gt=0, description="K-medoids 最大迭代次数")

    # 数据生成
    sensor_radius_undirected: float = Field(default=1.25, gt=0.0, description="无向传感器图半径常数")
    sensor_radius_directed: float = Field(default=1.45, gt=0.0, description="有向传感器图半径常数")
    sensor_max_retries: int = Field(default=20, ge=0, description="传感器图连通性重试次数")
    skewed_p_keep: float = Field(default=0.1, gt=0.0, le=1.0, description="偏斜球内层保留概率")

    # 基准测试
    sweep_workers: int = Field(default=1, ge=1, description="扫描实验并行线程数")
    bound_check_tolerance: float = Field(default=1e-9, ge=0.0, description="边界检查相对容差")


@lru_cache
def get_settings() -> Settings:
    """获取应用配置（进程内单例）.

    Returns:
        Settings: 应用配置实例
    """
    settings = Settings()
    logger.debug(f"配置加载完成: log_level={settings.log_level}, default_seed={settings.default_seed}")
    return settings


def reload_settings() -> Settings:
    """清除缓存并重新加载配置.

    Returns:
        Settings: 更新后的配置实例
    """
    get_settings.cache_clear()
    logger.info("重新加载配置")
    return get_settings()
