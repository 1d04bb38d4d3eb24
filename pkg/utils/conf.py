"""
Settings access for library code.

The numerical apps read their defaults from Django settings when a settings
module is configured and fall back to the built-in defaults otherwise.
"""

import logging
from typing import Any

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

logger = logging.getLogger(__name__)


def get_setting(name: str, default: Any) -> Any:
    """
    Read a project setting with a fallback.

    Args:
        name: Setting name, e.g. 'ZGAMMA_GRID_SIZE'
        default: Value used when the setting or the settings module is missing

    Returns:
        The configured value, or the default
    """
    try:
        return getattr(settings, name, default)
    except ImproperlyConfigured:
        logger.debug(f"Settings not configured, using default for {name}")
        return default
