"""Figure rendering for surfaces and exclusion curves.

Matplotlib loads lazily inside the render calls with the Agg backend
pinned, so importing this module costs nothing and the CLI stays headless.
Figures carry no styling beyond labels; they are working plots meant to
sit next to the CSV they were computed from.
"""

from __future__ import annotations

from .inference import BeliefSurface, EdgeCurve

__all__ = ["render_surface", "render_edge"]


def _pyplot():
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    return plt


def render_surface(surface: BeliefSurface, path: str) -> None:
    """Write a 3-D plot of the belief over the (a, f) unit square."""
    plt = _pyplot()
    import numpy as np

    a_grid, f_grid = np.meshgrid(surface.a_values, surface.f_values)
    z = np.asarray(surface.values)
    fig = plt.figure(figsize=(7.0, 5.5))
    ax = fig.add_subplot(projection="3d")
    ax.plot_surface(a_grid, f_grid, z, cmap="viridis", linewidth=0, antialiased=True)
    ax.set_xlabel("prior on other parent, $\\pi(a)$")
    ax.set_ylabel("evidence weight, $\\lambda(e^+)$")
    ax.set_zlabel("belief $p\\{B\\}$")
    ax.set_title(f"belief surface at prior b = {surface.b:g}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_edge(curve: EdgeCurve, path: str) -> None:
    """Write the f = 1 slice with its complete-exclusion reference curve."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ax.plot(curve.a_values, curve.partial, label="partial exclusion", color="tab:blue")
    ax.plot(
        curve.a_values,
        curve.complete,
        label="complete exclusion",
        color="tab:red",
        linestyle="--",
    )
    ax.axhline(curve.b, color="gray", linewidth=0.8, linestyle=":", label="prior b")
    ax.set_xlabel("prior on other parent, $\\pi(a)$")
    ax.set_ylabel("belief $p\\{B\\}$")
    ax.set_title(f"f = 1 exclusion curves at prior b = {curve.b:g}")
    ax.set_ylim(-0.02, 1.02)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
