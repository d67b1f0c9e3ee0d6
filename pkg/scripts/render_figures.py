"""Write SVG drawings of every n-wave graph on m vertices into a directory.

    python scripts/render_figures.py --n 3 --m 6 --outdir figures
"""

import argparse
from pathlib import Path

from wavebasis.graphs import enumerate_graphs, graph_to_word, render
from wavebasis.words import format_word


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--m", type=int, default=6)
    ap.add_argument("--outdir", default="figures")
    args = ap.parse_args()

    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for g in enumerate_graphs(args.n, args.m):
        name = format_word(graph_to_word(g), args.n)
        path = out / f"wave_n{args.n}_{name}.svg"
        path.write_text(render(g))
        print(path)


if __name__ == "__main__":
    main()
