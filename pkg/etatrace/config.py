"""
Run configuration: defaults, environment, configuration files and command-line flags.

Precedence, highest first: command-line flag, ``--config FILE`` value,
environment (``ETATRACE_CACHE`` for the cache directory), built-in default.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

from .converters import parse_fraction
from .errors import ConfigError, EtaTraceError
from .qmodule import DEFAULT_SIZE_LIMIT
from .rootdata import LieType, Weight

#: Environment variable naming the module cache directory.
CACHE_ENV = "ETATRACE_CACHE"

OUTPUT_FORMATS = ("text", "json")


def default_cache_dir() -> Path:
    return Path.home() / ".cache" / "etatrace"


@dataclass
class RunConfig:
    """
    Validated settings for one command.

    Example:
        >>> cfg = RunConfig.from_dict({"lie_type": "g2", "cutoff": "5", "threads": "auto"})
        >>> cfg.lie_type.name, cfg.cutoff
        ('G2', Fraction(5, 1))
    """

    command: str = ""
    lie_type: Optional[LieType] = None
    weight: Optional[Weight] = None
    cutoff: Optional[Fraction] = None
    output_format: str = "text"
    cache_dir: Optional[Path] = None
    use_cache: bool = True
    size_limit: int = DEFAULT_SIZE_LIMIT
    threads: Union[int, str] = 1

    def __post_init__(self) -> None:
        if isinstance(self.lie_type, str):
            try:
                self.lie_type = LieType.parse(self.lie_type)
            except EtaTraceError as exc:
                raise ConfigError(str(exc), "type") from exc
        if self.weight is not None and not isinstance(self.weight, Weight):
            try:
                self.weight = (
                    Weight.parse(self.weight)
                    if isinstance(self.weight, str)
                    else Weight(tuple(int(n) for n in self.weight))
                )
            except (EtaTraceError, TypeError, ValueError) as exc:
                raise ConfigError(str(exc), "weight") from exc
        if self.weight is not None and self.lie_type is not None:
            if len(self.weight) != self.lie_type.rank:
                raise ConfigError(
                    f"weight ({self.weight}) has {len(self.weight)} coordinates, "
                    f"{self.lie_type} needs {self.lie_type.rank}",
                    "weight",
                )
        if self.cutoff is not None:
            try:
                self.cutoff = parse_fraction(self.cutoff)
            except ValueError as exc:
                raise ConfigError(str(exc), "cutoff") from exc
            if self.cutoff <= 0:
                raise ConfigError(f"must be positive, got {self.cutoff}", "cutoff")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(
                f"unknown format {self.output_format!r}; expected one of {OUTPUT_FORMATS}",
                "format",
            )
        if self.cache_dir is not None:
            self.cache_dir = Path(self.cache_dir).expanduser()
        try:
            self.size_limit = int(self.size_limit)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"not an integer: {self.size_limit!r}", "size-limit") from exc
        if self.size_limit <= 0:
            raise ConfigError(f"must be positive, got {self.size_limit}", "size-limit")
        if self.threads != "auto":
            try:
                self.threads = int(self.threads)
            except (TypeError, ValueError) as exc:
                raise ConfigError(
                    f"expected an integer or 'auto', got {self.threads!r}", "threads"
                ) from exc
            if self.threads < 1:
                raise ConfigError(f"must be at least 1, got {self.threads}", "threads")

    @property
    def worker_count(self) -> int:
        """Number of worker threads, resolving 'auto' to the CPU count."""
        if self.threads == "auto":
            return os.cpu_count() or 1
        return int(self.threads)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "lie_type": self.lie_type.name if self.lie_type else None,
            "weight": str(self.weight) if self.weight is not None else None,
            "cutoff": str(self.cutoff) if self.cutoff is not None else None,
            "output_format": self.output_format,
            "cache_dir": str(self.cache_dir) if self.cache_dir else None,
            "use_cache": self.use_cache,
            "size_limit": self.size_limit,
            "threads": self.threads,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "RunConfig":
        """
        Create a RunConfig from a dictionary; unknown keys are rejected.

        ``type`` and ``format`` are accepted as aliases of ``lie_type`` and
        ``output_format``, and dashes in keys are read as underscores.

        Raises:
            ConfigError: On unknown keys or invalid values
        """
        known = {f.name for f in fields(cls)}
        aliases = {"type": "lie_type", "format": "output_format"}
        values: Dict[str, Any] = {}
        for key, value in data.items():
            name = aliases.get(key, key.replace("-", "_"))
            if name not in known:
                raise ConfigError(f"unknown configuration key {key!r}")
            values[name] = value
        return cls(**values)

    @classmethod
    def from_json(cls, path: Union[str, Path]) -> "RunConfig":
        """
        Load a configuration from a JSON file.

        Example:
            >>> cfg = RunConfig.from_json("run.json")
        """
        import json

        path = Path(path)
        with open(path, "r", encoding="utf-8") as f:
            try:
                data = json.load(f)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"cannot parse {path}: {exc}", "config") from exc
        return cls.from_dict(_mapping(data, path))

    @classmethod
    def from_yaml(cls, path: Union[str, Path]) -> "RunConfig":
        """
        Load a configuration from a YAML file.

        Raises:
            ImportError: If PyYAML is not installed
        """
        try:
            import yaml
        except ImportError:
            raise ImportError("PyYAML is required to load YAML files: pip install pyyaml")

        path = Path(path)
        with open(path, "r", encoding="utf-8") as f:
            try:
                data = yaml.safe_load(f)
            except yaml.YAMLError as exc:
                raise ConfigError(f"cannot parse {path}: {exc}", "config") from exc
        return cls.from_dict(_mapping(data or {}, path))

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "RunConfig":
        """Load JSON or YAML by file extension."""
        suffix = Path(path).suffix.lower()
        if suffix in (".yaml", ".yml"):
            return cls.from_yaml(path)
        if suffix == ".json":
            return cls.from_json(path)
        raise ConfigError(f"unsupported configuration file {path}; use .json, .yaml or .yml")


def _mapping(data: Any, path: Path) -> Mapping[str, Any]:
    if not isinstance(data, Mapping):
        raise ConfigError(f"{path} must hold a mapping of settings")
    return data


def resolve_config(
    flags: Mapping[str, Any],
    config_file: Optional[Union[str, Path]] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> RunConfig:
    """
    Merge the configuration layers; a flag value of None means "not given".

    Args:
        flags: Values from the command line
        config_file: Optional JSON or YAML file
        environ: Environment mapping (default: ``os.environ``)

    Returns:
        RunConfig with every layer applied

    Example:
        >>> cfg = resolve_config({"cutoff": "3"}, environ={"ETATRACE_CACHE": "/tmp/c"})
        >>> str(cfg.cache_dir)
        '/tmp/c'
    """
    env = os.environ if environ is None else environ
    merged: Dict[str, Any] = {"cache_dir": env.get(CACHE_ENV) or default_cache_dir()}
    if config_file is not None:
        try:
            from_file = RunConfig.from_file(config_file).to_dict()
        except OSError as exc:
            raise ConfigError(f"cannot read {config_file}: {exc}", "config") from exc
        merged.update({k: v for k, v in from_file.items() if v is not None and k != "command"})
    merged.update({k: v for k, v in flags.items() if v is not None})
    return RunConfig.from_dict(merged)
