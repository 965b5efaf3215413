import os
import logging
from typing import Dict, Any, Optional, Sequence

from pythonjsonlogger.json import JsonFormatter

from config.settings import LOG_DIR, LOG_LEVEL


class KnotClusterLogger:
    """
    Logger used across knotcluster

    Features:
    - Console logging in a human readable line format
    - File logging, JSON structured for machine parsing
    - Operation helpers that attach an "operation" field to every record
    """

    def __init__(
        self,
        name: str,
        log_dir: str = LOG_DIR,
        console_level: int = LOG_LEVEL,
        file_level: int = logging.DEBUG,
        json_logging: bool = True
    ):
        """Initialize logger"""
        self.name = name
        self.log_dir = log_dir
        self.json_logging = json_logging

        os.makedirs(log_dir, exist_ok=True)

        self.logger = logging.getLogger(f"knotcluster.{name}")
        self.logger.setLevel(logging.DEBUG)
        self.logger.propagate = False

        if self.logger.handlers:
            self.logger.handlers.clear()

        console_handler = logging.StreamHandler()
        console_handler.setLevel(console_level)
        console_handler.setFormatter(logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        ))
        self.logger.addHandler(console_handler)

        log_file = os.path.join(log_dir, f"{name}.log")
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(file_level)

        if json_logging:
            file_handler.setFormatter(JsonFormatter(
                "%(asctime)s %(name)s %(levelname)s %(message)s"
            ))
        else:
            file_handler.setFormatter(logging.Formatter(
                '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
            ))

        self.logger.addHandler(file_handler)

    def debug(self, message: str, extra: Optional[Dict[str, Any]] = None):
        """Log debug message"""
        self.logger.debug(message, extra=extra)

    def info(self, message: str, extra: Optional[Dict[str, Any]] = None):
        """Log info message"""
        self.logger.info(message, extra=extra)

    def warning(self, message: str, extra: Optional[Dict[str, Any]] = None):
        """Log warning message"""
        self.logger.warning(message, extra=extra)

    def error(self, message: str, extra: Optional[Dict[str, Any]] = None):
        """Log error message"""
        self.logger.error(message, extra=extra)

    def critical(self, message: str, extra: Optional[Dict[str, Any]] = None):
        """Log critical message"""
        self.logger.critical(message, extra=extra)

    def log_diagram_loaded(
        self,
        source: str,
        crossings: int,
        components: int,
        duration_ms: int
    ):
        """Log diagram ingestion"""
        extra = {
            "operation": "diagram_load",
            "source": source,
            "crossings": crossings,
            "components": components,
            "duration_ms": duration_ms
        }
        self.info(f"Diagram loaded: {source} ({crossings} crossings)", extra=extra)

    def log_mutation(self, vertex: int, step: int, green: bool):
        """Log a single seed mutation"""
        extra = {
            "operation": "seed_mutation",
            "vertex": vertex,
            "step": step,
            "green": green
        }
        self.debug(f"Mutation #{step} at {vertex}", extra=extra)

    def log_plan(
        self,
        events: int,
        rd3_moves: int,
        word: Sequence[int],
        duration_ms: int
    ):
        """Log a constructed mutation plan"""
        extra = {
            "operation": "mutation_plan",
            "events": events,
            "rd3_moves": rd3_moves,
            "word_length": len(word),
            "duration_ms": duration_ms
        }
        self.info(f"Plan built: {events} events, word of length {len(word)}", extra=extra)

    def log_check(
        self,
        check: str,
        passed: bool,
        witness: Optional[str] = None,
        duration_ms: Optional[int] = None
    ):
        """Log the outcome of a verification check"""
        extra = {
            "operation": "verify_check",
            "check": check,
            "passed": passed
        }
        if duration_ms is not None:
            extra["duration_ms"] = duration_ms
        if witness:
            extra["witness"] = witness
            self.warning(f"Check failed: {check} ({witness})", extra=extra)
        else:
            self.info(f"Check {'passed' if passed else 'failed'}: {check}", extra=extra)

    def log_lattice(self, segment: int, states: int, edges: int, sense: str):
        """Log a Kauffman state lattice construction"""
        extra = {
            "operation": "state_lattice",
            "segment": segment,
            "states": states,
            "edges": edges,
            "sense": sense
        }
        self.debug(f"Lattice for segment {segment}: {states} states, {edges} edges", extra=extra)
