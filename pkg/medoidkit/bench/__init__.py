"""基准测试：单次运行、扫描实验与 CSV 报告."""
