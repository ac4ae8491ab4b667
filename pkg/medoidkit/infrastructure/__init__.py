"""基础设施层：配置、日志、指标与异常."""
