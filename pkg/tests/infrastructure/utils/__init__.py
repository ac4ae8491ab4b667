"""基础设施工具测试."""

