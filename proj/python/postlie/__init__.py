"""Exact checks and constructions for post-Lie type algebras over Q(i)."""

from pathlib import Path

from ._core import (
    CheckReport,
    Document,
    Error,
    ParseError,
    PreconditionError,
    Scalar,
    UsageError,
    Violation,
    check,
    check_kinds,
    construction_names,
    default_corpus_dir,
    derive,
    run_acceptance,
)

__all__ = [
    "CheckReport",
    "Document",
    "Error",
    "ParseError",
    "PreconditionError",
    "Scalar",
    "UsageError",
    "Violation",
    "check",
    "check_kinds",
    "construction_names",
    "corpus_dir",
    "derive",
    "load",
    "run_acceptance",
]


def corpus_dir() -> Path:
    """Bundled corpus: the installed copy if present, else the source tree."""
    packaged = Path(__file__).with_name("corpus")
    return packaged if packaged.is_dir() else Path(default_corpus_dir())


def load(name_or_path) -> Document:
    """Loads a path, or a bare corpus name such as "sl2_pp"."""
    p = Path(name_or_path)
    if p.exists():
        return Document.load(p)
    return Document.load(corpus_dir() / f"{name_or_path}.pldoc")
