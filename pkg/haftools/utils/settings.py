# -*- coding: utf-8 -*-
"""
运行配置模块

配置来源为环境变量，缺省或非法时回退到默认值。
"""

import logging
import os
from dataclasses import dataclass
from typing import Mapping, Optional

from .constants import (
    DEFAULT_LOG_LEVEL, DEFAULT_MAX_BRUTE, DEFAULT_SEED,
    ENV_LOG_LEVEL, ENV_MAX_BRUTE, ENV_SEED
)

logger = logging.getLogger(__name__)

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class Settings:
    """运行配置"""
    max_brute: int = DEFAULT_MAX_BRUTE
    log_level: str = DEFAULT_LOG_LEVEL
    seed: int = DEFAULT_SEED

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> 'Settings':
        """从环境变量读取配置"""
        env = os.environ if environ is None else environ
        return cls(
            max_brute=_int_value(env, ENV_MAX_BRUTE, DEFAULT_MAX_BRUTE, minimum=0),
            log_level=_level_value(env, ENV_LOG_LEVEL, DEFAULT_LOG_LEVEL),
            seed=_int_value(env, ENV_SEED, DEFAULT_SEED),
        )


def _int_value(env: Mapping[str, str], key: str, default: int,
               minimum: Optional[int] = None) -> int:
    raw = env.get(key, "")
    if not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"环境变量 {key} 不是整数: {raw!r}，使用默认值 {default}")
        return default
    if minimum is not None and value < minimum:
        logger.warning(f"环境变量 {key} 小于 {minimum}: {value}，使用默认值 {default}")
        return default
    return value


def _level_value(env: Mapping[str, str], key: str, default: str) -> str:
    raw = env.get(key, "").strip().upper()
    if not raw:
        return default
    if raw not in _LOG_LEVELS:
        logger.warning(f"环境变量 {key} 不是有效的日志级别: {raw!r}")
        return default
    return raw
