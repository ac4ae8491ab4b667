"""配置管理模块.

使用示例:
    ```python
    from medoidkit.infrastructure.config import get_settings

    settings = get_settings()
    print(settings.trikmeds_max_iters)
    ```
"""

from medoidkit.infrastructure.config.settings import Settings, get_settings, reload_settings

__all__ = ["Settings", "get_settings", "reload_settings"]
