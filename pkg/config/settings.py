"""
Runtime settings, read from the environment (and a local .env file)
"""
import os
import logging

from dotenv import load_dotenv

load_dotenv()

REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

FIXTURES_DIR = os.getenv("KC_FIXTURES", os.path.join(REPO_ROOT, "fixtures"))
LOG_DIR = os.getenv("KC_LOG_DIR", "logs")
LOG_LEVEL = getattr(logging, os.getenv("KC_LOG_LEVEL", "INFO").upper(), logging.INFO)
REPORT_DIR = os.getenv("KC_REPORT_DIR", os.path.join("data", "reports"))

# Rotation sense that counts as "up" in the Kauffman state lattice.
# Calibrated against the figure-eight F-polynomials.
CLOCKWISE = "clockwise"
COUNTERCLOCKWISE = "counterclockwise"
CLOCK_SENSE = os.getenv("KC_CLOCK_SENSE", COUNTERCLOCKWISE).lower()

RD3_SEARCH_DEPTH = int(os.getenv("KC_RD3_SEARCH_DEPTH", "8"))
MAX_WORKERS = int(os.getenv("KC_MAX_WORKERS", "4"))


def fixture_path(name: str) -> str:
    """Resolve a fixture file name against the fixture root"""
    if os.path.isabs(name) or os.path.exists(name):
        return name
    return os.path.join(FIXTURES_DIR, name)
