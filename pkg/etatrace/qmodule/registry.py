"""
Registry of built modules keyed by (kind, type, highest weight), with an optional disk cache.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
import threading
import warnings
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from ..converters import canonical_dumps
from ..errors import CacheFormatError
from ..rootdata import LieType, RootDatum, Weight, WeightLike, as_weight, build_root_datum
from ..rootdata.weights import _dominant
from .builder import DEFAULT_SIZE_LIMIT, check_size
from .module import (
    ClassicalModule,
    IrrModule,
    WeightModule,
    build_classical_module,
    build_module,
    module_from_dict,
)

logger = logging.getLogger(__name__)

#: Version of the on-disk module format; entries with another version are rebuilt.
CACHE_FORMAT_VERSION = 1

KINDS = ("quantum", "classical")

Key = Tuple[str, str, Tuple[int, ...]]
DatumLike = Union[RootDatum, LieType, str]


def _datum(value: DatumLike) -> RootDatum:
    return value if isinstance(value, RootDatum) else build_root_datum(value)


def payload_digest(module_data: Dict[str, Any]) -> str:
    """SHA-256 of the canonical JSON text of a module document."""
    return hashlib.sha256(canonical_dumps(module_data).encode("utf-8")).hexdigest()


class ModuleRegistry:
    """
    Registry of constructed modules with lookup by kind, Lie type and highest weight.

    A module is built at most once per registry. With a ``cache_dir`` the registry also
    persists modules as JSON files; a cache entry carries a format version and
    a digest of its payload, and entries failing either check are rebuilt
    with a warning.

    Example:
        >>> registry = ModuleRegistry()
        >>> m = registry.get("A2", (1, 1))
        >>> m.dim
        8
        >>> registry.get("A2", (1, 1)) is m
        True
        >>> ("quantum", "A2", (1, 1)) in registry
        True
    """

    def __init__(
        self,
        cache_dir: Optional[Union[str, Path]] = None,
        size_limit: int = DEFAULT_SIZE_LIMIT,
    ) -> None:
        """
        Initialize an empty registry.

        Args:
            cache_dir: Directory for the JSON cache; None keeps modules in memory only
            size_limit: Maximum dimension of a module the registry will build or load
        """
        self.cache_dir: Optional[Path] = Path(cache_dir).expanduser() if cache_dir else None
        self.size_limit = size_limit
        self._modules: Dict[Key, WeightModule] = {}
        self._lock = threading.Lock()

    @staticmethod
    def key(kind: str, datum: RootDatum, lam: Weight) -> Key:
        if kind not in KINDS:
            raise ValueError(f"unknown module kind {kind!r}; expected one of {KINDS}")
        return (kind, datum.lie_type.name, tuple(lam.coords))

    def get(self, lie: DatumLike, lam: WeightLike, kind: str = "quantum") -> WeightModule:
        """
        Get V(lambda), building it (or loading it from the disk cache) on first use.

        Args:
            lie: RootDatum, LieType or type name such as "G2"
            lam: Dominant highest weight
            kind: "quantum" for V(lambda) over QQ(q), "classical" for V_1(lambda) over QQ

        Returns:
            The module; repeated calls return the same object

        Raises:
            InvalidWeightError: If lambda is not dominant
            SizeLimitExceeded: If dim V(lambda) exceeds the registry's size limit
        """
        datum = _datum(lie)
        weight = _dominant(datum, as_weight(lam))
        key = self.key(kind, datum, weight)
        with self._lock:
            found = self._modules.get(key)
        if found is not None:
            return found
        # refuse oversized modules even when a cache entry exists
        check_size(datum, weight, self.size_limit)
        module = self._load(key, datum)
        if module is None:
            logger.info("building %s V(%s) of %s", kind, weight, datum.lie_type)
            if kind == "quantum":
                module = build_module(datum, weight, self.size_limit)
            else:
                module = build_classical_module(datum, weight, self.size_limit)
            self._store(key, module)
        with self._lock:
            return self._modules.setdefault(key, module)

    def quantum(self, lie: DatumLike, lam: WeightLike) -> IrrModule:
        module = self.get(lie, lam, "quantum")
        assert isinstance(module, IrrModule)
        return module

    def classical(self, lie: DatumLike, lam: WeightLike) -> ClassicalModule:
        module = self.get(lie, lam, "classical")
        assert isinstance(module, ClassicalModule)
        return module

    def register(self, module: WeightModule) -> None:
        """Add an already built module, replacing any entry with the same key."""
        kind = "classical" if isinstance(module, ClassicalModule) else "quantum"
        with self._lock:
            self._modules[self.key(kind, module.datum, module.lam)] = module

    def list_modules(self, kind: Optional[str] = None) -> List[WeightModule]:
        """Registered modules, optionally only those of one kind."""
        with self._lock:
            items = list(self._modules.items())
        return [m for (k, _, _), m in items if kind is None or k == kind]

    def remove(self, key: Key) -> bool:
        """Forget a module in memory; the disk cache is left alone."""
        with self._lock:
            return self._modules.pop(key, None) is not None

    def clear(self) -> None:
        with self._lock:
            self._modules.clear()

    # -- disk cache -----------------------------------------------------------

    def cache_path(self, key: Key) -> Optional[Path]:
        if self.cache_dir is None:
            return None
        kind, type_name, coords = key
        stem = "_".join(str(n) for n in coords) or "0"
        return self.cache_dir / f"v{CACHE_FORMAT_VERSION}" / type_name / f"{kind}-{stem}.json"

    def _load(self, key: Key, datum: RootDatum) -> Optional[WeightModule]:
        path = self.cache_path(key)
        if path is None or not path.exists():
            return None
        try:
            module = read_cache_entry(path, datum)
        except (CacheFormatError, OSError, ValueError, KeyError, TypeError) as exc:
            warnings.warn(f"discarding cache entry {path}: {exc}; rebuilding", stacklevel=3)
            return None
        if (module.lam.coords != key[2]) or (
            isinstance(module, ClassicalModule) != (key[0] == "classical")
        ):
            warnings.warn(f"cache entry {path} holds another module; rebuilding", stacklevel=3)
            return None
        logger.debug("cache hit %s", path)
        return module

    def _store(self, key: Key, module: WeightModule) -> None:
        path = self.cache_path(key)
        if path is None:
            return
        try:
            write_cache_entry(path, module)
        except OSError as exc:
            warnings.warn(f"could not write cache entry {path}: {exc}", stacklevel=3)
            return
        logger.debug("cache store %s", path)

    def __len__(self) -> int:
        return len(self._modules)

    def __contains__(self, key: object) -> bool:
        return key in self._modules

    def __repr__(self) -> str:
        where = f", cache_dir='{self.cache_dir}'" if self.cache_dir else ""
        return f"ModuleRegistry(modules={len(self._modules)}{where})"


def write_cache_entry(path: Path, module: WeightModule) -> None:
    """Write a module document atomically (temporary file, then rename)."""
    data = module.to_dict()  # type: ignore[attr-defined]
    document = {
        "format_version": CACHE_FORMAT_VERSION,
        "digest": payload_digest(data),
        "module": data,
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(canonical_dumps(document))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_cache_entry(path: Path, datum: RootDatum) -> WeightModule:
    """
    Load and validate a cache entry.

    Raises:
        CacheFormatError: On a wrong format version, a digest mismatch or unreadable JSON
    """
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CacheFormatError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(document, dict):
        raise CacheFormatError(f"{path} does not hold a JSON object")
    version = document.get("format_version")
    if version != CACHE_FORMAT_VERSION:
        raise CacheFormatError(
            f"format version {version!r} in {path}, expected {CACHE_FORMAT_VERSION}"
        )
    data = document.get("module")
    if not isinstance(data, dict) or document.get("digest") != payload_digest(data):
        raise CacheFormatError(f"digest mismatch in {path}")
    return module_from_dict(datum, data)


# Global default registry instance
default_registry: ModuleRegistry = ModuleRegistry()
