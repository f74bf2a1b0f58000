"""Plain-text persistence for extension operators.

The file is a sequence of ``key=value`` lines. Floats are written with 17
significant digits so every float64 round-trips exactly; complex arrays are
flattened to alternating real and imaginary parts. The last line is a
SHA-256 checksum over everything above it.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

import numpy as np

from . import linalg
from .extension import OPERATOR_VERSION, ExtensionConfig, ExtensionOperator, build_system_matrix

FORMAT_NAME = "bife-extension-operator"
RECONSTRUCTION_TOL = 1e-13


class CacheError(ValueError):
    """Base class for unreadable or invalid cache files."""


class CacheVersionError(CacheError):
    pass


class CacheChecksumError(CacheError):
    pass


class CacheConfigMismatch(CacheError):
    pass


class CacheInvariantError(CacheError):
    pass


def _floats(values) -> str:
    return " ".join(f"{v:.17e}" for v in np.ravel(values))


def _complex(values) -> str:
    arr = np.asarray(values, dtype=complex).ravel()
    return _floats(np.column_stack((arr.real, arr.imag)))


def _digest(body: str) -> str:
    return hashlib.sha256(body.encode("utf-8")).hexdigest()


def save_operator(op: ExtensionOperator, path) -> Path:
    cfg, F = op.config, op.factorization
    rows, cols = F.shape
    lines = [
        f"format={FORMAT_NAME}",
        f"version={op.version}",
        f"T={cfg.T:.17e}",
        f"m={cfg.m}",
        f"gamma={cfg.gamma:.17e}",
        f"tau={cfg.tau:.17e}",
        f"n={cfg.n}",
        f"L={op.geometry.L}",
        f"rows={rows}",
        f"cols={cols}",
        f"rank={F.s.size}",
        f"s={_floats(F.s)}",
        f"U={_complex(F.U)}",
        f"V={_complex(F.V)}",
    ]
    body = "\n".join(lines) + "\n"
    path = Path(path)
    path.write_text(body + f"sha256={_digest(body)}\n", encoding="utf-8")
    return path


def _parse(text: str) -> tuple[dict[str, str], str]:
    lines = text.splitlines(keepends=True)
    if not lines or not lines[-1].startswith("sha256="):
        raise CacheChecksumError("missing checksum line")
    body = "".join(lines[:-1])
    if _digest(body) != lines[-1].strip().split("=", 1)[1]:
        raise CacheChecksumError("checksum does not match file contents")
    fields = {}
    for line in lines[:-1]:
        key, sep, value = line.rstrip("\n").partition("=")
        if not sep:
            raise CacheError(f"malformed line {line[:40]!r}")
        fields[key] = value
    return fields, body


def _array(text: str, count: int) -> np.ndarray:
    arr = np.array(text.split(), dtype=float) if text else np.zeros(0)
    if arr.size != count:
        raise CacheInvariantError(f"expected {count} numbers, found {arr.size}")
    return arr


def load_operator(path, config: ExtensionConfig | None = None) -> ExtensionOperator:
    """Read an operator back and validate it against its own system matrix.

    If ``config`` is given the stored configuration must match it exactly.
    """
    fields, _ = _parse(Path(path).read_text(encoding="utf-8"))
    try:
        if fields["format"] != FORMAT_NAME:
            raise CacheError(f"not an operator cache file (format={fields['format']!r})")
        version = int(fields["version"])
        if version != OPERATOR_VERSION:
            raise CacheVersionError(f"cache version {version}, expected {OPERATOR_VERSION}")
        stored = ExtensionConfig(
            T=float(fields["T"]), m=int(fields["m"]), gamma=float(fields["gamma"]), tau=float(fields["tau"])
        )
        rows, cols, r = int(fields["rows"]), int(fields["cols"]), int(fields["rank"])
        s = _array(fields["s"], r)
        U = _array(fields["U"], 2 * rows * r).view(complex).reshape(rows, r)
        V = _array(fields["V"], 2 * cols * r).view(complex).reshape(cols, r)
    except KeyError as exc:
        raise CacheError(f"missing field {exc.args[0]!r}") from None
    if config is not None and config != stored:
        raise CacheConfigMismatch(f"cache holds {stored}, requested {config}")
    if (rows, cols) != (2 * stored.m, 2 * stored.n + 1) or r != min(rows, cols):
        raise CacheInvariantError("factor shapes do not match the configuration")
    if int(fields["n"]) != stored.n or int(fields["L"]) != stored.geometry.L:
        raise CacheInvariantError("derived sizes do not match the configuration")
    if np.any(s < 0) or np.any(np.diff(s) > 0):
        raise CacheInvariantError("singular values must be non-negative and non-increasing")
    F = linalg.SVDFactorization(U=U, s=s, V=V)
    A = build_system_matrix(stored.geometry, stored.n)
    rel = np.linalg.norm(F.reconstruct() - A) / np.linalg.norm(A)
    if not rel <= RECONSTRUCTION_TOL:
        raise CacheInvariantError(f"reconstruction error {rel:.2e} exceeds {RECONSTRUCTION_TOL:.0e}")
    return ExtensionOperator(config=stored, factorization=F, version=version)
