import os
import json
from typing import List, Optional, Tuple

from config.settings import fixture_path
from utils.logger import KnotClusterLogger

logger = KnotClusterLogger("fixture-validator")

DIAGRAM_EXTENSIONS = [".json", ".pd", ".txt"]


def validate_fixture(path: str, expected_extensions: Optional[List[str]] = None) -> Tuple[bool, str]:
    """
    Check that a diagram source exists and has a readable format

    Args:
        path: file path, fixture name, or "gen:" continued fraction
        expected_extensions: accepted extensions (optional)

    Returns:
        Tuple of (is_valid, detected_kind or reason)
    """
    if path.startswith("gen:"):
        entries = path[4:].replace(" ", "").split(",")
        if entries and all(e.isdigit() and int(e) > 0 for e in entries):
            return True, "continued-fraction"
        return False, f"Invalid continued fraction: {path[4:]}"

    resolved = fixture_path(path)
    if not os.path.exists(resolved):
        logger.error(f"File not found: {resolved}")
        return False, "File not found"

    _, ext = os.path.splitext(resolved)
    ext = ext.lower()
    allowed = expected_extensions or DIAGRAM_EXTENSIONS
    if ext not in allowed:
        logger.warning(f"Extension mismatch for {resolved}. Expected: {allowed}, Got: {ext}")
        return False, ext

    if ext == ".json":
        try:
            with open(resolved, "r", encoding="utf-8") as f:
                json.load(f)
        except json.JSONDecodeError as e:
            return False, f"Invalid JSON: {str(e)}"
        return True, "json"

    with open(resolved, "r", encoding="utf-8") as f:
        content = f.read()
    if "X[" not in content:
        return False, "No PD crossings found"
    return True, "pd"


def resolve_source(path: str) -> str:
    """Fixture-relative path of a diagram source; "gen:" paths pass through"""
    if path.startswith("gen:"):
        return path
    return fixture_path(path)
