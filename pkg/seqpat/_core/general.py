import copy
import logging
import os
from collections.abc import Iterable
from typing import Union

from box import Box

from seqpat._core import exceptions
from seqpat._core.dict_util import deep_dict_merge
from seqpat._core.loader import load_single_document_yaml
from seqpat._core.schema.jsonschema import verify_jsonschema

logger: logging.Logger = logging.getLogger(__name__)

DEFAULT_SETTINGS: dict = {
    "distance": {
        "default_algorithm": "auto",
        "auto_brute_limit": 10_000,
    },
    "completeness": {
        "search_budget": 100_000,
    },
    "verify": {
        "max_length": 8,
        "max_level": 5,
    },
}


def load_global_config(
    settings_paths: Iterable[Union[str, os.PathLike]] = (),
) -> Box:
    """Given a list of file paths to settings files, load each of them and
    merge them over the defaults.

    This does a deep dict merge, later files win.

    Args:
        settings_paths: List of filenames to load from

    Returns:
        frozen, validated settings

    Raises:
        BadSchemaError: merged settings do not match the settings schema
        InvalidSettingsError: a file did not hold a mapping
    """
    settings = copy.deepcopy(DEFAULT_SETTINGS)

    for filename in settings_paths:
        logger.debug("Loading settings from %s", filename)
        contents = load_single_document_yaml(filename) or {}
        if not isinstance(contents, dict):
            raise exceptions.InvalidSettingsError(
                f"settings file {filename} must contain a mapping, got {type(contents)}"
            )
        settings = deep_dict_merge(settings, contents)

    verify_jsonschema(settings, "config")
    return Box(settings, frozen_box=True)
