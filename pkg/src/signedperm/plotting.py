"""Figures for the report commands, drawn off-screen with the Agg canvas."""
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure


def _save(fig, path):
    FigureCanvasAgg(fig)
    fig.savefig(path, dpi=100)


def plot_triangle(tri, path):
    """Heat map of a (des, ides) triangle with the counts written in."""
    n = tri.n
    fig = Figure(figsize=(1.2 + 0.6 * (n + 1), 1.0 + 0.6 * (n + 1)))
    ax = fig.add_subplot()
    im = ax.imshow(tri.counts, cmap="viridis", origin="upper")
    peak = max(max(r) for r in tri.counts) or 1
    for i, row in enumerate(tri.counts):
        for j, c in enumerate(row):
            ax.text(j, i, str(c), ha="center", va="center", fontsize=8,
                    color="white" if c < peak / 2 else "black")
    ax.set_xlabel("ides")
    ax.set_ylabel("des")
    ax.set_xticks(range(n + 1))
    ax.set_yticks(range(n + 1))
    ax.set_title(f"B_{n}, {tri.order.value} order")
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    _save(fig, path)
    return path


def plot_descent_vector(vec, path):
    """Bar chart of a descent vector."""
    fig = Figure(figsize=(4, 3))
    ax = fig.add_subplot()
    ks = list(range(vec.n + 1))
    ax.bar(ks, vec.counts, color="tab:blue")
    ax.set_xticks(ks)
    ax.set_xlabel("des")
    ax.set_ylabel("count")
    label = "involutions" if vec.family.value == "inv" else "fpf involutions"
    ax.set_title(f"{label} of B_{vec.n}, {vec.order.value} order")
    fig.tight_layout()
    _save(fig, path)
    return path
