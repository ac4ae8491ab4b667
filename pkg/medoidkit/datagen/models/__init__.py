"""数据生成模型."""

from medoidkit.datagen.models.spec import GENERATOR_KINDS, SKEWED_PRESETS, GenSpec

__all__ = ["GenSpec", "GENERATOR_KINDS", "SKEWED_PRESETS"]
