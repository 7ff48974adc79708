from __future__ import annotations

from functools import partial
from multiprocessing import Pool
from typing import Callable, Iterable, TypeVar

from more_itertools import chunked
from tqdm import tqdm

__all__ = ["batch_map"]

T = TypeVar("T")
U = TypeVar("U")


def _store_and_update(result, index, results, pbar):
    results[index] = result
    if pbar is not None:
        pbar.update()


def _apply_batch(func: Callable[[T], U], batch: list[T]) -> list[U]:
    return [func(item) for item in batch]


def batch_map(
    func: Callable[[T], U],
    items: Iterable[T],
    n_cores: int = 1,
    chunk_size: int = 16,
    show_progress: bool = False,
    tqdm_desc: str | None = None,
) -> list[U]:
    """
    Apply ``func`` to every item, returning the results in input order. Items are
    batched into chunks of ``chunk_size`` (via :func:`more_itertools.chunked`) and each
    chunk is sent to a worker in a :class:`multiprocessing.Pool` of ``n_cores``
    processes, with the option to show a progress bar (per chunk) using tqdm.

    With ``n_cores=1`` (the default) no pool is created and the chunks run in-process.
    ``func`` must be picklable when ``n_cores > 1`` (a module-level function or a
    :func:`functools.partial` of one).

    Args:
      func          : The function to apply (must be free of side effects).
      items         : The inputs, consumed once.
      n_cores       : Number of worker processes (default: 1, i.e. serial).
      chunk_size    : Number of items per submitted batch (default: 16).
      show_progress : Whether to show a tqdm progress bar (default: False).
      tqdm_desc     : Description for the progress bar.
    """
    batches = [*chunked(items, chunk_size)]
    results: list[list[U] | None] = [None] * len(batches)
    pbar = tqdm(total=len(batches), desc=tqdm_desc) if show_progress else None
    try:
        if n_cores <= 1:
            for i, batch in enumerate(batches):
                _store_and_update(_apply_batch(func, batch), i, results, pbar)
        else:
            with Pool(processes=n_cores) as pool:
                pending = [
                    pool.apply_async(
                        func=_apply_batch,
                        args=(func, batch),
                        callback=partial(
                            _store_and_update, index=i, results=results, pbar=pbar
                        ),
                    )
                    for i, batch in enumerate(batches)
                ]
                for job in pending:
                    job.get()  # Re-raise any worker exception here
    finally:
        if pbar is not None:
            pbar.close()
    return [result for batch_result in results for result in batch_result or []]
