"""合成数据生成."""
