from __future__ import annotations

from abc import ABC, abstractmethod


class IUnitOfWork(ABC):
    """
    Publishes every output file of a sweep together, or none of them.

    Used as a context manager: a clean exit commits, an exception rolls back and propagates.
    A failed commit is rolled back too.
    """

    def __enter__(self) -> "IUnitOfWork":
        self.rollback()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        if exc_type is not None:
            self.rollback()
            return
        try:
            self.commit()
        except Exception:
            self.rollback()
            raise

    @abstractmethod
    def stage(self, path: str) -> str:
        """
        Reserve a scratch file whose content replaces `path` on commit.

        Args:
            path (str): Final destination.

        Returns:
            str: Path the repository should write to. Staging the same destination twice
            returns the same scratch file.
        """
        raise NotImplementedError()

    @abstractmethod
    def commit(self) -> None:
        raise NotImplementedError()

    @abstractmethod
    def rollback(self) -> None:
        """Discard staged files; a no-op when nothing is staged."""
        raise NotImplementedError()
