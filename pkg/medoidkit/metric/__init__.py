"""度量空间：数据集、距离预言机与能量."""
