"""Built-in anyon models with exact modular data.

Every entry is constructed from closed-form expressions and is
strict-validated before it is handed out. Model names follow a small
grammar so the CLI can address parameterized entries:

    trivial
    toric_code_zn(N)        quantum double of Z_N, 1 <= N <= 8
    semion
    double_semion
    fibonacci[(c)]          c in {1, -1} picks the twist conjugate
    ising[(c)]              c in {1, -1} picks the twist conjugate
    product(A,B)            Deligne product of two catalog entries
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import InputError
from .fusion import FusionRing, validate_ring
from .modular import ModularData, validate_modular_data

BASE_NAMES = (
    "trivial",
    "toric_code_zn",
    "semion",
    "double_semion",
    "fibonacci",
    "ising",
    "product",
)


def catalog_names() -> list[str]:
    """Template listing of the catalog grammar, for display."""
    return [
        "trivial",
        "toric_code_zn(N)  [1 <= N <= 8]",
        "semion",
        "double_semion",
        "fibonacci  /  fibonacci(-1)",
        "ising  /  ising(-1)",
        "product(A,B)  [A, B catalog names]",
    ]


def parse_model_name(text: str):
    """Parse a catalog name like ``product(toric_code_zn(2),semion)``.

    Returns ``(base, params)`` where params are ints or nested
    ``(base, params)`` tuples.
    """
    pos = 0
    s = text.strip()

    def error(msg):
        raise InputError(f"cannot parse model name {text!r}: {msg}")

    def parse_name():
        nonlocal pos
        start = pos
        while pos < len(s) and (s[pos].isalnum() or s[pos] == "_"):
            pos += 1
        if pos == start:
            error(f"expected a name at position {start}")
        base = s[start:pos]
        params = []
        if pos < len(s) and s[pos] == "(":
            pos += 1
            while True:
                while pos < len(s) and s[pos] == " ":
                    pos += 1
                params.append(parse_arg())
                while pos < len(s) and s[pos] == " ":
                    pos += 1
                if pos < len(s) and s[pos] == ",":
                    pos += 1
                    continue
                if pos < len(s) and s[pos] == ")":
                    pos += 1
                    break
                error("expected ',' or ')'")
        return base, params

    def parse_arg():
        nonlocal pos
        start = pos
        if pos < len(s) and (s[pos].isdigit() or s[pos] == "-"):
            pos += 1
            while pos < len(s) and s[pos].isdigit():
                pos += 1
            return int(s[start:pos])
        return parse_name()

    out = parse_name()
    if pos != len(s):
        error(f"trailing characters at position {pos}")
    return out


def _zn_label_name(j: int, k: int) -> str:
    if j == 0 and k == 0:
        return "1"
    parts = []
    if j:
        parts.append("e" if j == 1 else f"e{j}")
    if k:
        parts.append("m" if k == 1 else f"m{k}")
    return "".join(parts)


def _toric_code_zn(n: int) -> ModularData:
    if not 1 <= n <= 8:
        raise InputError(f"toric_code_zn needs 1 <= N <= 8, got {n}")
    elements = list(itertools.product(range(n), range(n)))
    rank = len(elements)
    index = {g: i for i, g in enumerate(elements)}
    fusion = np.zeros((rank, rank, rank), dtype=np.int64)
    for g in elements:
        for h in elements:
            fusion[index[g], index[h], index[((g[0] + h[0]) % n, (g[1] + h[1]) % n)]] = 1
    dual = [index[((-j) % n, (-k) % n)] for j, k in elements]
    if n == 2:
        names = ["1", "m", "e", "f"]
    else:
        names = [_zn_label_name(j, k) for j, k in elements]
    ring = FusionRing(names, dual, fusion)

    omega = 2j * np.pi / n
    theta = np.array([np.exp(omega * j * k) for j, k in elements])
    s = np.array(
        [[np.exp(omega * (j * kk + k * jj)) for jj, kk in elements] for j, k in elements]
    )
    return ModularData(ring, s, theta, np.ones(rank), name=f"toric_code_zn({n})")


def _semion() -> ModularData:
    fusion = np.zeros((2, 2, 2), dtype=np.int64)
    fusion[0, 0, 0] = 1
    fusion[0, 1, 1] = 1
    fusion[1, 0, 1] = 1
    fusion[1, 1, 0] = 1
    ring = FusionRing(["1", "s"], [0, 1], fusion)
    s = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128)
    theta = np.array([1.0, 1j])
    return ModularData(ring, s, theta, np.ones(2), name="semion")


def _double_semion() -> ModularData:
    # product of a semion and its twist conjugate, presented on Z2 x Z2
    elements = list(itertools.product(range(2), range(2)))
    rank = 4
    index = {g: i for i, g in enumerate(elements)}
    fusion = np.zeros((rank, rank, rank), dtype=np.int64)
    for g in elements:
        for h in elements:
            fusion[index[g], index[h], index[((g[0] + h[0]) % 2, (g[1] + h[1]) % 2)]] = 1
    ring = FusionRing(["1", "sbar", "s", "b"], list(range(4)), fusion)
    theta = np.array([1.0, -1j, 1j, 1.0])
    s = np.array(
        [
            [(-1.0 + 0j) ** (a * aa + b * bb) for aa, bb in elements]
            for a, b in elements
        ]
    )
    return ModularData(ring, s, theta, np.ones(rank), name="double_semion")


def _fibonacci(conjugate: int = 1) -> ModularData:
    if conjugate not in (1, -1):
        raise InputError(f"fibonacci conjugate selector must be 1 or -1, got {conjugate}")
    phi = (1 + np.sqrt(5)) / 2
    fusion = np.zeros((2, 2, 2), dtype=np.int64)
    fusion[0, 0, 0] = 1
    fusion[0, 1, 1] = 1
    fusion[1, 0, 1] = 1
    fusion[1, 1, 0] = 1
    fusion[1, 1, 1] = 1
    ring = FusionRing(["1", "tau"], [0, 1], fusion)
    s = np.array([[1.0, phi], [phi, -1.0]], dtype=np.complex128)
    theta = np.array([1.0, np.exp(conjugate * 4j * np.pi / 5)])
    name = "fibonacci" if conjugate == 1 else "fibonacci(-1)"
    return ModularData(ring, s, theta, np.array([1.0, phi]), name=name)


def _ising(conjugate: int = 1) -> ModularData:
    if conjugate not in (1, -1):
        raise InputError(f"ising conjugate selector must be 1 or -1, got {conjugate}")
    r2 = np.sqrt(2.0)
    fusion = np.zeros((3, 3, 3), dtype=np.int64)
    for a in range(3):
        fusion[0, a, a] = 1
        fusion[a, 0, a] = 1
    fusion[1, 1, 0] = 1
    fusion[1, 1, 2] = 1
    fusion[1, 2, 1] = 1
    fusion[2, 1, 1] = 1
    fusion[2, 2, 0] = 1
    ring = FusionRing(["1", "sigma", "psi"], [0, 1, 2], fusion)
    s = np.array([[1.0, r2, 1.0], [r2, 0.0, -r2], [1.0, -r2, 1.0]], dtype=np.complex128)
    theta = np.array([1.0, np.exp(conjugate * 1j * np.pi / 8), -1.0])
    name = "ising" if conjugate == 1 else "ising(-1)"
    return ModularData(ring, s, theta, np.array([1.0, r2, 1.0]), name=name)


def _trivial() -> ModularData:
    ring = FusionRing(["1"], [0], np.ones((1, 1, 1), dtype=np.int64))
    return ModularData(ring, np.ones((1, 1)), np.ones(1), np.ones(1), name="trivial")


def product_model(left: ModularData, right: ModularData, name: str = "") -> ModularData:
    """Deligne product: Kronecker S and twists, pairwise fusion and duals."""
    ra, rb = left.ring, right.ring
    rank = ra.rank * rb.rank
    names = [f"({a.name},{b.name})" for a in ra.labels for b in rb.labels]
    fusion = np.einsum("ace,bdf->abcdef", ra.fusion_tensor, rb.fusion_tensor)
    fusion = fusion.reshape(rank, rank, rank)
    dual = [
        ra.dual_map[a] * rb.rank + rb.dual_map[b]
        for a in range(ra.rank)
        for b in range(rb.rank)
    ]
    ring = FusionRing(names, dual, fusion)
    return ModularData(
        ring,
        np.kron(left.s, right.s),
        np.kron(left.theta, right.theta),
        np.kron(left.dims, right.dims),
        min(left.tol, right.tol),
        name=name or f"product({left.name},{right.name})",
    )


def catalog_model(name: str, params=None) -> ModularData:
    """Build a validated catalog entry from a name and optional parameters."""
    if params is None:
        base, parsed = parse_model_name(name)
    else:
        base, parsed = name.strip(), list(params)

    def as_model(arg):
        if isinstance(arg, tuple):
            return catalog_model(arg[0], arg[1])
        if isinstance(arg, str):
            return catalog_model(arg)
        raise InputError(f"expected a model name, got {arg!r}")

    if base == "trivial":
        if parsed:
            raise InputError("trivial takes no parameters")
        md = _trivial()
    elif base == "toric_code_zn":
        if len(parsed) != 1 or not isinstance(parsed[0], int):
            raise InputError("toric_code_zn takes exactly one integer parameter N")
        md = _toric_code_zn(parsed[0])
    elif base == "semion":
        if parsed:
            raise InputError("semion takes no parameters")
        md = _semion()
    elif base == "double_semion":
        if parsed:
            raise InputError("double_semion takes no parameters")
        md = _double_semion()
    elif base == "fibonacci":
        if len(parsed) > 1:
            raise InputError("fibonacci takes at most one parameter")
        md = _fibonacci(parsed[0] if parsed else 1)
    elif base == "ising":
        if len(parsed) > 1:
            raise InputError("ising takes at most one parameter")
        md = _ising(parsed[0] if parsed else 1)
    elif base == "product":
        if len(parsed) != 2:
            raise InputError("product takes exactly two catalog names")
        md = product_model(as_model(parsed[0]), as_model(parsed[1]))
    else:
        raise InputError(f"unknown catalog model {base!r}; known: {', '.join(BASE_NAMES)}")

    ring_report = validate_ring(md.ring)
    if not ring_report.ok:
        raise InputError(f"catalog ring {md.name} failed validation: {ring_report.violations}")
    report = validate_modular_data(md, strict=True)
    if not report.ok:
        raise InputError(f"catalog entry {md.name} failed validation: {report.violations}")
    return md
