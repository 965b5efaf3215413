import time
import concurrent.futures
from typing import Callable, List, Sequence, TypeVar

from config.settings import MAX_WORKERS
from utils.logger import KnotClusterLogger

# Initialize logger
logger = KnotClusterLogger("parallel-runner")

T = TypeVar("T")
R = TypeVar("R")


def run_parallel(
    job: Callable[[T], R],
    items: Sequence[T],
    max_workers: int = MAX_WORKERS,
    label: str = "jobs"
) -> List[R]:
    """
    Run independent jobs in a thread pool

    Args:
        job: function applied to every item
        items: job inputs
        max_workers: Maximum number of parallel jobs
        label: name used in log lines

    Returns:
        Results in input order

    Raises:
        The first exception raised by a job, after every job finished
    """
    if not items:
        return []

    logger.info(f"Starting {len(items)} {label} with {max_workers} workers")
    start_time = time.time()

    results: List[R] = [None] * len(items)
    errors = {}
    with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
        future_to_index = {
            executor.submit(job, item): index
            for index, item in enumerate(items)
        }

        for future in concurrent.futures.as_completed(future_to_index):
            index = future_to_index[future]
            try:
                results[index] = future.result()
            except Exception as e:
                logger.error(f"Error in {label} #{index}: {str(e)}")
                errors[index] = e

    duration_ms = int((time.time() - start_time) * 1000)
    logger.info(f"{label} completed in {duration_ms}ms, {len(items) - len(errors)}/{len(items)} succeeded")

    if errors:
        raise errors[min(errors)]
    return results
