"""The concrete groups shipped as generator files."""
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from ..config import DATA_DIR
from ..errors import DataFileError
from ..linalg.io import load_matrices
from ..linalg.matrix import CycMatrix
from .group import FiniteMatrixGroup, generate, projectivize

logger = logging.getLogger(__name__)

SL_FILE = "gen_sl27_p3.mat"
PLANE_FILE = "gen_psl27_p2.mat"
XY3_FILE = "klein_xy3_p2.mat"
DATA_FILES = (SL_FILE, PLANE_FILE, XY3_FILE)


def _named(path: Path, names: list[str]) -> list[CycMatrix]:
    matrices = load_matrices(path)
    missing = [n for n in names if n not in matrices]
    if missing:
        raise DataFileError("%s lacks matrices %s" % (path, ", ".join(missing)))
    return [matrices[n] for n in names]


@lru_cache(maxsize=None)
def sl_generators(data_dir: Path = DATA_DIR) -> tuple[CycMatrix, ...]:
    """The two generators of SL2(F7) on C^4"""
    return tuple(_named(Path(data_dir) / SL_FILE, ["g1", "g2"]))


@lru_cache(maxsize=None)
def plane_generators_printed(data_dir: Path = DATA_DIR) -> tuple[CycMatrix, ...]:
    """A, B, C, D as printed, acting on column vectors"""
    return tuple(_named(Path(data_dir) / PLANE_FILE, ["A", "B", "C", "D"]))


def plane_generators(data_dir: Path = DATA_DIR) -> tuple[CycMatrix, ...]:
    """Transposes of A, B, C, D: the same group in the row-vector convention"""
    return tuple(m.transpose() for m in plane_generators_printed(data_dir))


@lru_cache(maxsize=None)
def xy3_generators(data_dir: Path = DATA_DIR) -> tuple[CycMatrix, ...]:
    return tuple(_named(Path(data_dir) / XY3_FILE, ["T", "P", "S"]))


@dataclass(eq=False)
class StandardGroups:
    cover: FiniteMatrixGroup  # SL2(F7) on C^4
    space: FiniteMatrixGroup  # its image in PGL4, order 168
    plane: FiniteMatrixGroup  # <A^T, B^T, C^T, D^T> on C^3


@lru_cache(maxsize=None)
def standard_groups(data_dir: Path = DATA_DIR, cap: int = 1000) -> StandardGroups:
    cover = generate(list(sl_generators(data_dir)), cap=cap, label="SL2(F7)")
    space = projectivize(cover)
    space.label = "PSL2(F7) on P3"
    plane = generate(list(plane_generators(data_dir)), cap=cap, label="PSL2(F7) on P2")
    logger.info("Standard groups ready: cover %d, space %d, plane %d", cover.order, space.order, plane.order)
    return StandardGroups(cover, space, plane)
