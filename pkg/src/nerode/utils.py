import os
import json
import logging
import traceback
from typing import Dict, List, Any, Optional

logger = logging.getLogger(__name__)

# Path for storing toolkit settings
SETTINGS_DIR = "data/nerode"
SETTINGS_FILE = "settings.json"
SETTINGS_ENV = "NERODE_SETTINGS"

# Environment variables overriding individual settings
ENV_OVERRIDES = {
    "alphabet": "NERODE_ALPHABET",
    "horizons": "NERODE_HORIZONS",
    "max_k": "NERODE_MAX_K",
    "workers": "NERODE_WORKERS",
}


def settings_path() -> str:
    """Location of the settings file, honouring $NERODE_SETTINGS."""
    return os.environ.get(SETTINGS_ENV) or os.path.join(SETTINGS_DIR, SETTINGS_FILE)


def ensure_settings_dir(path: str):
    """Ensure the directory holding the settings file exists."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)


def load_settings(path: Optional[str] = None, include_environment: bool = True) -> Dict[str, Any]:
    """Load toolkit settings.

    Values from the JSON settings file are overridden by the NERODE_*
    environment variables.

    Args:
        path: Settings file; defaults to settings_path()
        include_environment: Apply the environment overrides

    Returns:
        Dictionary with settings, or an empty dict if nothing is configured
    """
    path = path or settings_path()
    settings: Dict[str, Any] = {}

    if os.path.exists(path):
        try:
            with open(path, 'r') as f:
                loaded = json.load(f)
            if isinstance(loaded, dict):
                settings.update(loaded)
            else:
                logger.warning("Ignoring settings file %s: expected a JSON object", path)
        except (OSError, ValueError) as e:
            logger.warning("Error loading settings from %s: %s", path, e)

    if include_environment:
        for key, variable in ENV_OVERRIDES.items():
            value = os.environ.get(variable)
            if value:
                settings[key] = value

    return settings


def save_settings(settings: Dict[str, Any], path: Optional[str] = None) -> bool:
    """Save toolkit settings.

    Args:
        settings: Dictionary with settings
        path: Settings file; defaults to settings_path()

    Returns:
        True if successful, False otherwise
    """
    path = path or settings_path()
    ensure_settings_dir(path)

    try:
        with open(path, 'w') as f:
            json.dump(settings, f, indent=2)
        return True
    except OSError as e:
        logger.warning("Error saving settings to %s: %s", path, e)
        return False


def parse_int_list(value: Any) -> List[int]:
    """Parse "16,32,64" (or an already-parsed list) into integers.

    Raises:
        ValueError: If an item is not an integer
    """
    if isinstance(value, (list, tuple)):
        return [int(v) for v in value]
    items = [item.strip() for item in str(value).split(',') if item.strip()]
    try:
        return [int(item) for item in items]
    except ValueError:
        raise ValueError(f"Expected a comma-separated list of integers, got {value!r}") from None


def format_error_response(error: Exception) -> str:
    """Format an error for the command line.

    The traceback is included only when debug logging is enabled.

    Args:
        error: Exception object

    Returns:
        Formatted error message
    """
    message = f"Error: {error}"
    if logging.getLogger("nerode").isEnabledFor(logging.DEBUG):
        trace = "".join(traceback.format_exception(error))
        message += f"\n\nDetails:\n{trace}"
    return message
