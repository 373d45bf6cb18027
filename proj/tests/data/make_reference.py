#!/usr/bin/env python3
"""Regenerates graph6_reference.txt with networkx as the reference encoder.

Each line: <graph6> <n> <m> [<u>-<v> ...]
"""

import random

import networkx as nx


def record(g):
    g6 = nx.to_graph6_bytes(g, header=False).decode().strip()
    edges = sorted((min(u, v), max(u, v)) for u, v in g.edges())
    cols = [g6, str(g.number_of_nodes()), str(len(edges))]
    cols += [f"{u}-{v}" for u, v in edges]
    return " ".join(cols)


def main():
    rng = random.Random(20240915)
    graphs = []

    for n in range(1, 8):
        graphs.append(nx.empty_graph(n))
        graphs.append(nx.path_graph(n))
        graphs.append(nx.complete_graph(n))
        if n >= 3:
            graphs.append(nx.cycle_graph(n))
        if n >= 2:
            graphs.append(nx.star_graph(n - 1))
    for r in range(1, 5):
        for s in range(r, 5):
            graphs.append(nx.complete_bipartite_graph(r, s))
    graphs.append(nx.petersen_graph())
    for n in range(8, 21):
        for p in (0.2, 0.5, 0.8):
            graphs.append(nx.gnp_random_graph(n, p, seed=rng.randrange(2**31)))

    lines = [record(g) for g in graphs]
    with open("graph6_reference.txt", "w") as fh:
        fh.write("\n".join(lines) + "\n")

    # a small corpus with the optional header, for the file reader
    with open("with_header.g6", "wb") as fh:
        fh.write(b">>graph6<<")
        for g in [nx.cycle_graph(4), nx.path_graph(3), nx.complete_graph(5)]:
            fh.write(nx.to_graph6_bytes(g, header=False))


if __name__ == "__main__":
    main()
