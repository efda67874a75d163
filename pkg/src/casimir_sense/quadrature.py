"""Adaptive panel quadrature used by the Casimir integrals.

Composite Gauss-Legendre rule over a list of panel edges; the panel set is
refined by bisecting every panel until two successive refinements agree.
Integrands must be vectorized over the node array (real or complex values).
The scheme is deliberately simple: the integrands here are smooth between
well-understood breakpoints (kernel scale 1/2z, light line, plasmon pole),
which the caller supplies as initial edges.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


class QuadratureError(RuntimeError):
    """Adaptive refinement failed to converge; carries the residual estimate."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual estimate {residual:.3e})")
        self.residual = residual


@lru_cache(maxsize=8)
def _gauss_nodes(order: int):
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


def fixed_panels(f, edges, order: int = 24):
    """Composite Gauss-Legendre integral of f over consecutive [e_i, e_i+1]."""
    edges = np.asarray(edges, dtype=float)
    x, w = _gauss_nodes(order)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    vals = f(nodes)
    weights = (half[:, None] * w[None, :]).ravel()
    return np.sum(vals * weights)


def integrate_refined(f, edges, rtol: float = 1e-9, atol: float = 0.0,
                      order: int = 24, max_doublings: int = 12):
    """Integrate f, bisecting all panels until successive sums agree.

    Convergence: |I_k - I_{k-1}| <= max(rtol * |I_k|, atol).  Returns
    (value, error_estimate); raises QuadratureError when the budget of
    doublings is exhausted.
    """
    edges = np.unique(np.asarray(edges, dtype=float))
    if edges.size < 2:
        raise ValueError("need at least two distinct edges")
    prev = fixed_panels(f, edges, order)
    for _ in range(max_doublings):
        mids = 0.5 * (edges[:-1] + edges[1:])
        edges = np.sort(np.concatenate([edges, mids]))
        cur = fixed_panels(f, edges, order)
        err = abs(cur - prev)
        if err <= max(rtol * abs(cur), atol):
            return cur, err
        prev = cur
    raise QuadratureError("quadrature did not converge", float(err))


def clip_edges(candidates, lo: float, hi: float):
    """Sorted unique edge list restricted to [lo, hi], endpoints included."""
    pts = [lo, hi] + [p for p in candidates if lo < p < hi]
    return np.unique(np.asarray(pts, dtype=float))
