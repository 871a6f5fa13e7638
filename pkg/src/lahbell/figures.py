"""Figure rendering for benchmark reports."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_bench_figure(report, path):
    """Plot median evaluation time against n, one line per method.

    `report` is the benchmark report mapping produced by the CLI; the
    figure is written to `path` (format chosen by the file extension).
    """
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for method in report["methods"]:
        points = [(e["n"], e["median_ns"]) for e in report["entries"] if e["method"] == method]
        xs = [n for n, _ in points]
        ys = [max(t, 1) for _, t in points]  # log axis cannot show 0 ns
        ax.plot(xs, ys, marker="o", markersize=3, linewidth=1.2, label=method)
    ax.set_xlabel("n")
    ax.set_ylabel("median time per evaluation (ns)")
    ax.set_yscale("log")
    ax.set_title("Bell number evaluation time by method")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
