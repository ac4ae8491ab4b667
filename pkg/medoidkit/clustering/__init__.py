"""K-medoids 聚类：KMEDS 与 trikmeds-ε."""
