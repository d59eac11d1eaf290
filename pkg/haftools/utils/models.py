# -*- coding: utf-8 -*-
"""
数据类定义模块
"""

import json
from dataclasses import dataclass, field, asdict
from typing import Any, Dict, Optional


@dataclass
class OpCounter:
    """标量运算计数器

    binomial_steps 按乘法公式计 2·min(k, n-k) 次（每步一次乘法、一次整除）；
    ring_ops 为环上的乘法与加法次数。
    """
    ring_ops: int = 0
    binomial_steps: int = 0

    @property
    def total(self) -> int:
        return self.ring_ops + self.binomial_steps

    def add_ring_ops(self, count: int = 1) -> None:
        self.ring_ops += count

    def add_binomial_steps(self, count: int) -> None:
        self.binomial_steps += count

    def reset(self) -> None:
        self.ring_ops = 0
        self.binomial_steps = 0

    def to_dict(self) -> Dict:
        """转换为字典"""
        return {**asdict(self), "total": self.total}


@dataclass
class OutputRecord:
    """命令输出记录"""
    command: str
    params: Dict[str, Any] = field(default_factory=dict)
    result: Any = None
    timing_ms: Optional[float] = None

    def to_dict(self) -> Dict:
        """转换为字典"""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict) -> 'OutputRecord':
        """从字典创建"""
        return cls(
            command=data["command"],
            params=dict(data.get("params", {})),
            result=data.get("result"),
            timing_ms=data.get("timing_ms")
        )

    def render(self) -> str:
        """渲染为规范 JSON；timing_ms 为 None 时省略"""
        data = self.to_dict()
        if self.timing_ms is None:
            data.pop("timing_ms")
        return json.dumps(data, sort_keys=True, ensure_ascii=False)

    @classmethod
    def parse(cls, text: str) -> 'OutputRecord':
        """解析 render() 的输出"""
        return cls.from_dict(json.loads(text))


@dataclass
class SuiteResult:
    """校验套件结果"""
    name: str
    passed: bool
    checked: int = 0
    detail: str = ""

    def to_dict(self) -> Dict:
        return asdict(self)

    def get_display_line(self) -> str:
        """获取输出行"""
        status = "PASS" if self.passed else "FAIL"
        detail = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.name} [{self.checked}]{detail}"


@dataclass
class BenchPoint:
    """基准测试中单个 m 的结果"""
    m: int
    ops: int
    wall_ms: float

    def to_dict(self) -> Dict:
        return asdict(self)
