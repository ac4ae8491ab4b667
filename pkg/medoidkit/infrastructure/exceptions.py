"""异常定义."""

from pathlib import Path
from typing import Optional, Tuple, Union


class MedoidKitError(Exception):
    """所有 medoidkit 异常的基类."""

    def __init__(self, msg: str):
        super().__init__(msg)
        self._msg = msg


class DataParseError(MedoidKitError):
    """数据文件解析失败，携带文件路径和出错行号（从 1 开始）."""

    def __init__(self, msg: str, path: Union[str, Path, None] = None, line_number: Optional[int] = None):
        location = f"{path}:{line_number}" if line_number is not None else f"{path}"
        super().__init__(f"{location}: {msg}" if path is not None else msg)
        self.path = path
        self.line_number = line_number


class DisconnectedGraphError(MedoidKitError):
    """图不连通（有向图时为不强连通），``witness`` 是一对不存在路径的节点."""

    def __init__(self, witness: Tuple[int, int]):
        super().__init__(f"图不连通: 节点 {witness[0]} 到节点 {witness[1]} 不存在路径")
        self.witness = witness


class UnreachableNodeError(MedoidKitError):
    """最短路计算中出现不可达节点."""

    def __init__(self, source: int, node: int):
        super().__init__(f"节点 {node} 从节点 {source} 不可达")
        self.source = source
        self.node = node


class EmptyDatasetError(MedoidKitError):
    """元素集合为空."""


class InvalidParameterError(MedoidKitError, ValueError):
    """参数不满足前置条件."""


class BoundViolationError(MedoidKitError):
    """运行时检查发现下界超过真实值."""

    def __init__(self, kind: str, element: int, bound: float, actual: float):
        super().__init__(f"{kind} 下界失效: 元素 {element} 的下界 {bound!r} 大于真实值 {actual!r}")
        self.kind = kind
        self.element = element
        self.bound = bound
        self.actual = actual


class GeneratorError(MedoidKitError):
    """数据生成失败."""
