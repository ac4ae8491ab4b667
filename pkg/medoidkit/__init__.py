"""medoidkit: 度量空间中的 medoid 与 K-medoids 工具包."""

__version__ = "0.1.0"
