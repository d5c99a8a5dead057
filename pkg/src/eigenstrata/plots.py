"""Figure rendering for the report commands.

Every plotting function takes a payload dict (the same object the JSON
output serializes) and writes one figure file; the CLI wires these to the
--plot/--plot-dir flags.  Figures are a convenience view of the reports —
the delimited/JSON output remains the canonical artifact, and determinism
claims apply to it, not to image bytes.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

_STYLE = {
    "figure.figsize": (7.0, 4.2),
    "axes.grid": True,
    "grid.alpha": 0.3,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "font.size": 10,
}


def _save(fig, path: str):
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def eval_frac(text: str) -> float:
    if "/" in text:
        num, den = text.split("/")
        return int(num) / int(den)
    return float(int(text))


def plot_hilbert(payload: dict, path: str):
    """Formula versus oracle values of the Hilbert function, per degree."""
    rows = payload["rows"]
    ts = [r["t"] for r in rows]
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        paper = [None if r["paper"] is None else eval_frac(r["paper"]) for r in rows]
        derksen = [eval_frac(r["derksen"]) for r in rows]
        oracle = [r["oracle"] for r in rows]
        if any(v is not None for v in paper):
            ax.plot(ts, paper, "o-", label="closed form (ordered count)")
        ax.plot(ts, derksen, "s--", label="closed form (distinct subspaces)")
        kept = [(t, v) for t, v in zip(ts, oracle) if v is not None]
        if kept:
            ax.plot(*zip(*kept), "d:", color="k", label="rank oracle")
        ax.set_xlabel("degree t")
        ax.set_ylabel("Hilbert function value")
        ax.set_title(f"diagonal arrangement, multiplicities ({payload['partition']})")
        ax.legend()
        _save(fig, path)


def plot_invariants(payload: dict, path: str):
    """Graded dimensions of both invariant spaces, side by side per degree."""
    rows = payload["rows"]
    degrees = [r["degree"] for r in rows]
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        width = 0.38
        xs = range(len(degrees))
        ax.bar([x - width / 2 for x in xs], [r["dim_symmetric"] for r in rows],
               width, label="symmetric side")
        ax.bar([x + width / 2 for x in xs], [r["dim_traces"] for r in rows],
               width, label="trace-product side")
        ax.set_xticks(list(xs), [str(d) for d in degrees])
        ax.set_xlabel("degree")
        ax.set_ylabel("dimension of vanishing subspace")
        ax.set_title(f"graded invariant dimensions, multiplicities ({payload['partition']})")
        ax.legend()
        _save(fig, path)


def plot_edd(payload: dict, path: str):
    """Squared distances of all critical points for the seeded data vector."""
    pts = payload["critical_points"]
    dists = [eval_frac(p["squared_distance"]) for p in pts]
    labels = ["|".join("".join(str(i) for i in b) for b in p["subspace"])
              for p in pts]
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        xs = range(len(dists))
        ax.bar(xs, dists, color=["tab:green" if k == 0 else "tab:blue" for k in xs])
        if len(labels) <= 20:
            ax.set_xticks(list(xs), labels, rotation=60, fontsize=7)
        else:
            ax.set_xlabel("critical point (sorted)")
        ax.set_ylabel("squared distance")
        ax.set_title(f"critical points, multiplicities ({payload['partition']}): "
                     f"{payload['real_critical_count']} distinct "
                     f"(closed form {payload['paper_edd']})")
        _save(fig, path)


def plot_nearest(payload: dict, path: str):
    """Input eigenvalues and the block means they collapse to."""
    eigen = payload["eigenvalues"]
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        xs = range(1, len(eigen) + 1)
        ax.plot(xs, eigen, "o", label="input eigenvalues")
        for block, mean in zip(payload["grouping"], payload["block_means"]):
            ax.hlines(mean, min(block) - 0.2, max(block) + 0.2,
                      color="tab:red", lw=2)
            for i in block:
                ax.plot([i, i], [eigen[i - 1], mean], ":", color="gray", lw=0.8)
        ax.plot([], [], color="tab:red", lw=2, label="block means")
        ax.set_xticks(list(xs))
        ax.set_xlabel("sorted eigenvalue index")
        ax.set_ylabel("value")
        ax.set_title(f"nearest matrix with multiplicities ({payload['partition']}): "
                     f"distance {payload['distance']:.6g}")
        ax.legend()
        _save(fig, path)


def plot_interpolation(payload: dict, path: str):
    """System size against the discovered kernel, one bar each."""
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        labels = ["monomials", "samples", "vanishing forms"]
        values = [payload["monomial_count"], payload["sample_count"],
                  payload["nullspace_dim"]]
        bars = ax.bar(labels, values, color=["tab:blue", "tab:gray", "tab:green"])
        ax.bar_label(bars)
        ax.set_ylabel("count")
        ax.set_title(f"degree-{payload['degree']} interpolation, multiplicities "
                     f"({payload['partition']}), mode {payload['mode']}")
        _save(fig, path)


def plot_suite(payload: dict, path: str):
    """One row per criterion, colored by status."""
    results = payload["results"]
    colors = {"PASS": "tab:green", "WARN": "tab:orange", "FAIL": "tab:red"}
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(7.5, 0.42 * len(results) + 1.2))
        ys = range(len(results), 0, -1)
        for y, r in zip(ys, results):
            ax.barh(y, 1.0, color=colors[r["status"]], alpha=0.75)
            ax.text(0.01, y, f"{r['criterion']:>2}. {r['name']} [{r['status']}]",
                    va="center", fontsize=8)
        ax.set_xlim(0, 1)
        ax.set_yticks([])
        ax.set_xticks([])
        ax.set_title(f"acceptance suite, seed {payload['seed']}: "
                     f"{'ok' if payload['ok'] else 'failures present'}")
        _save(fig, path)
