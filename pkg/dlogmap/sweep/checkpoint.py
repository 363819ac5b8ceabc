"""
Checkpoint files for resumable sweeps.

A checkpoint is a JSON document holding the sweep parameters and the exact
partial results of every completed chunk, keyed by the chunk's first g.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Union

# Configure logger for this module
logger = logging.getLogger(__name__)

CHECKPOINT_VERSION = 1


class CheckpointError(ValueError):
    """Raised when a checkpoint is unreadable or belongs to another sweep."""


class Checkpoint:
    """Completed chunks of one sweep, persisted after every update.

    Args:
        path: Checkpoint file (created on first save)
        params: Sweep parameters the file must match
    """

    def __init__(self, path: Union[str, Path], params: Dict[str, Any]):
        self.path = Path(path)
        self.params = dict(params)
        self.chunks: Dict[int, Dict[str, Any]] = {}

    def load(self) -> "Checkpoint":
        """Read completed chunks, if the file exists."""
        if not self.path.exists():
            logger.debug(f"No checkpoint at {self.path}, starting fresh")
            return self
        try:
            with open(self.path, "r") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise CheckpointError(f"corrupt checkpoint {self.path}: {e}") from e
        except OSError as e:
            raise OSError(f"cannot read checkpoint {self.path}: {e}") from e

        if not isinstance(data, dict) or data.get("version") != CHECKPOINT_VERSION:
            raise CheckpointError(f"unrecognized checkpoint format in {self.path}")
        stored = data.get("params")
        if stored != self.params:
            raise CheckpointError(
                f"checkpoint {self.path} belongs to a different sweep: {stored} != {self.params}"
            )
        chunks = data.get("chunks")
        if not isinstance(chunks, dict):
            raise CheckpointError(f"checkpoint {self.path} has no chunk table")
        try:
            self.chunks = {int(start): chunk for start, chunk in chunks.items()}
        except ValueError as e:
            raise CheckpointError(f"bad chunk key in {self.path}: {e}") from e
        logger.info(f"Resuming from {self.path}: {len(self.chunks)} chunks done")
        return self

    def record(self, start: int, chunk: Dict[str, Any]) -> None:
        self.chunks[start] = chunk
        self.save()

    def save(self) -> None:
        """Write atomically: temp file in the same directory, then rename."""
        document = {
            "version": CHECKPOINT_VERSION,
            "params": self.params,
            "chunks": {str(start): self.chunks[start] for start in sorted(self.chunks)},
        }
        tmp = self.path.with_name(self.path.name + ".tmp")
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(tmp, "w") as f:
                json.dump(document, f)
            os.replace(tmp, self.path)
        except OSError as e:
            raise OSError(f"cannot write checkpoint {self.path}: {e}") from e
        logger.debug(f"Checkpoint saved: {len(self.chunks)} chunks -> {self.path}")
