"""
Batch Processing Module
Evaluate independent sweep / benchmark points concurrently with progress tracking
"""
import os
import queue
import threading
import time


def default_worker_count():
    """
    Worker count honouring the ZZ_LATTICE_THREADS cap

    Returns:
        Number of worker threads (at least 1)
    """
    cap = os.environ.get("ZZ_LATTICE_THREADS")
    if cap:
        try:
            return max(1, int(cap))
        except ValueError:
            print(f"⚠️ Ignoring non-integer ZZ_LATTICE_THREADS={cap!r}")
    return max(1, min(4, os.cpu_count() or 1))


class BatchOutcome:
    """
    Result slot for one task: either a value or the exception it raised
    """

    __slots__ = ("index", "value", "error")

    def __init__(self, index, value=None, error=None):
        self.index = index
        self.value = value
        self.error = error

    @property
    def ok(self):
        return self.error is None


class BatchProcessor:
    """
    Thread-pool evaluator for independent points

    Results are always returned in input order, whatever order the
    workers finish in.
    """

    def __init__(self, max_workers=None, label="batch", verbose=False):
        """
        Initialize batch processor

        Args:
            max_workers: Maximum concurrent evaluations (None = env / cpu default)
            label: Name used in progress lines
            verbose: Print progress lines
        """
        self.max_workers = max_workers or default_worker_count()
        self.label = label
        self.verbose = verbose
        self.lock = threading.Lock()
        self.completed = 0
        self.total = 0

    def _record(self, outcomes, outcome):
        with self.lock:
            outcomes[outcome.index] = outcome
            self.completed += 1
            if self.verbose and self.total:
                progress = 100.0 * self.completed / self.total
                print(f"  {self.label}: {self.completed}/{self.total} ({progress:.0f}%)", end="\r")

    def _worker(self, tasks, outcomes, function):
        while True:
            try:
                index, item = tasks.get_nowait()
            except queue.Empty:
                return
            try:
                outcome = BatchOutcome(index, value=function(item))
            except Exception as e:
                outcome = BatchOutcome(index, error=e)
            self._record(outcomes, outcome)
            tasks.task_done()

    def run(self, items, function):
        """
        Evaluate function on every item

        Args:
            items: Sequence of inputs
            function: Callable applied to each item

        Returns:
            List of BatchOutcome in input order
        """
        items = list(items)
        self.total = len(items)
        self.completed = 0
        outcomes = [None] * self.total
        if not items:
            return outcomes

        start_time = time.time()
        tasks = queue.Queue()
        for i, item in enumerate(items):
            tasks.put((i, item))

        n_threads = min(self.max_workers, len(items))
        if n_threads == 1:
            self._worker(tasks, outcomes, function)
        else:
            threads = []
            for _ in range(n_threads):
                thread = threading.Thread(
                    target=self._worker,
                    args=(tasks, outcomes, function),
                    daemon=True
                )
                thread.start()
                threads.append(thread)
            for thread in threads:
                thread.join()

        if self.verbose:
            failed = sum(1 for o in outcomes if not o.ok)
            print(f"  {self.label}: {self.total} points in {time.time() - start_time:.1f}s, {failed} failed")
        return outcomes

    def map(self, items, function):
        """
        Evaluate function on every item and re-raise the first failure

        Args:
            items: Sequence of inputs
            function: Callable applied to each item

        Returns:
            List of values in input order
        """
        outcomes = self.run(items, function)
        for outcome in outcomes:
            if not outcome.ok:
                raise outcome.error
        return [o.value for o in outcomes]
