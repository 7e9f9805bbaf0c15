"""Write all connected graphs on n vertices, one graph6 line each.

Every connected graph has a vertex whose removal leaves it connected, so the
connected graphs on n vertices are exactly the one-vertex extensions of the
connected graphs on n-1 vertices.  Isomorphic extensions are merged through
nauty certificates (pynauty), and the output is sorted for reproducibility.

    python scripts/generate_connected_g6.py 9 --out tests/data/connected9.g6.gz

Needs the optional ``census-gen`` extra (pynauty).
"""

import argparse
import gzip
import sys
import time

import pynauty

from bicliquebounds.census import generate_all_connected
from bicliquebounds.graph import Graph, bits, to_graph6


def certificate(g: Graph) -> bytes:
    adj = {v: list(bits(g.adj[v])) for v in range(g.n)}
    return pynauty.certificate(pynauty.Graph(g.n, adjacency_dict=adj))


def extend(graphs):
    seen = {}
    for g in graphs:
        n = g.n
        for s in range(1, 1 << n):
            adj = [a | ((s >> v & 1) << n) for v, a in enumerate(g.adj)] + [s]
            h = Graph(n + 1, adj)
            cert = certificate(h)
            if cert not in seen:
                seen[cert] = h
    return list(seen.values())


def connected_graphs(n):
    base = min(n, 6)
    graphs = list(generate_all_connected(base))
    for _ in range(base, n):
        graphs = extend(graphs)
    return graphs


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n", type=int)
    ap.add_argument("--out", default="-")
    args = ap.parse_args(argv)

    t0 = time.time()
    lines = sorted(to_graph6(g) for g in connected_graphs(args.n))
    text = "".join(line + "\n" for line in lines)
    if args.out == "-":
        sys.stdout.write(text)
    elif args.out.endswith(".gz"):
        with open(args.out, "wb") as raw, gzip.GzipFile(fileobj=raw, mode="wb", mtime=0) as fh:
            fh.write(text.encode())
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    print(f"n={args.n}: {len(lines)} connected graphs in {time.time() - t0:.1f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
