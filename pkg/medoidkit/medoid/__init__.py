"""medoid 算法：trimed 与基于采样的 RAND / TOPRANK / TOPRANK2."""
