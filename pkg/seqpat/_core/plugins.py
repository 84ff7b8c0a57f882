"""Distance backends loaded from the 'seqpat_distance' entry point namespace

Each backend computes an exact pattern distance for a sequence set. Selecting
'auto' is resolved before a backend is looked up.
"""

import dataclasses
import logging
from typing import Any, Protocol

import stevedore
from box import Box

from seqpat._core import exceptions
from seqpat._core.metric import Algorithm, DistanceResult, resolve_algorithm
from seqpat._core.sequence import SequenceSet

logger: logging.Logger = logging.getLogger(__name__)

NAMESPACE = "seqpat_distance"


def plugin_load_error(mgr, entry_point, err):
    """Handle import errors"""
    msg = f"Error loading plugin {entry_point} - {err}"
    raise exceptions.PluginLoadError(msg) from err


class _DistanceBackend(Protocol):
    """A distance backend"""

    name: str

    def supports(self, k: int) -> bool: ...

    def solve(self, Q: SequenceSet, settings: Box) -> DistanceResult: ...


def is_valid_backend(ext: stevedore.extension.Extension) -> bool:
    """Whether the loaded object has everything a backend needs

    Args:
        ext: loaded extension, with the instantiated backend in ``obj``

    Returns:
        Whether the plugin has everything we need to use it
    """
    required = ["name", "supports", "solve"]
    return all(hasattr(ext.obj, i) for i in required)


@dataclasses.dataclass
class _PluginCache:
    plugins: list[Any] = dataclasses.field(default_factory=list)

    def __call__(self) -> list[Any]:
        if not self.plugins:
            self.plugins = self._load_plugins()
        return self.plugins

    @staticmethod
    def _load_plugins() -> list[Any]:
        manager = stevedore.ExtensionManager(
            namespace=NAMESPACE,
            invoke_on_load=True,
            on_load_failure_callback=plugin_load_error,
        )

        invalid = [ext.name for ext in manager.extensions if not is_valid_backend(ext)]
        if invalid:
            raise exceptions.PluginLoadError(f"invalid distance backends: {invalid}")
        if not manager.extensions:
            raise exceptions.PluginLoadError(
                f"no distance backends found in '{NAMESPACE}' namespace - is seqpat installed?"
            )

        logger.debug("loaded distance backends: %s", [ext.name for ext in manager.extensions])
        return list(manager.extensions)


load_plugins = _PluginCache()


def get_backend(name: str) -> _DistanceBackend:
    """Find a loaded backend by entry point name

    Raises:
        PluginLoadError: no backend with that name
    """
    for ext in load_plugins():
        if ext.name == name:
            return ext.obj

    raise exceptions.PluginLoadError(f"no distance backend called '{name}'")


def solve_with_backend(Q: SequenceSet, algorithm: str, settings: Box) -> DistanceResult:
    """Resolve 'auto', pick the backend and run it

    'auto' only picks brute force when the search also fits in
    ``completeness.search_budget``.

    Raises:
        ArityError: the backend does not handle this many sequences
    """
    brute_limit = min(
        settings.distance.auto_brute_limit, settings.completeness.search_budget
    )
    chosen = resolve_algorithm(algorithm, Q.level, Q.k, brute_limit)
    if chosen is Algorithm.AUTO:  # pragma: no cover
        raise exceptions.PluginLoadError("'auto' did not resolve to a backend")

    backend = get_backend(chosen.value)
    if not backend.supports(Q.k):
        raise exceptions.ArityError(f"'{backend.name}' cannot handle k={Q.k} sequences")

    logger.debug("using '%s' backend for k=%d n=%d l=%d", backend.name, Q.k, Q.length, Q.level)
    return backend.solve(Q, settings)
