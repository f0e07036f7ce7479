#!/usr/bin/env python3
"""Regenerate the committed graph fixtures under data/.

Corpus: all connected graphs on 2..7 vertices up to isomorphism (networkx
graph atlas), kept when they are planar (exact embedding check) and contain
no 4-cycle sharing an edge with a 3-cycle.  Written as edge-list files under
data/corpus/ with 1-based vertex ids.

Also writes the standalone named fixtures under data/ (small graphs, cover
and capacity files used by the CLI tests and the README examples) plus the
line graph of the dodecahedron: 4-regular, planar and without any 4-cycle,
so it is the handiest host on which the chorded-6-cycle reduction actually
fires.

This is an offline step; the outputs are committed.  Requires networkx.
"""

import pathlib
import sys

import networkx as nx

ROOT = pathlib.Path(__file__).resolve().parent.parent
DATA = ROOT / "data"


def cycles(G, length):
    """All cycles of exactly `length`, one tuple per rotation/reflection class."""
    out = []
    adj = {v: sorted(G.neighbors(v)) for v in G.nodes()}

    def dfs(path):
        last = path[-1]
        if len(path) == length:
            if path[0] in adj[last] and path[1] < path[-1]:
                out.append(tuple(path))
            return
        for w in adj[last]:
            if w > path[0] and w not in path:
                dfs(path + [w])

    for v in sorted(G.nodes()):
        dfs([v])
    return out


def edge_set(cycle):
    k = len(cycle)
    return frozenset(frozenset((cycle[i], cycle[(i + 1) % k])) for i in range(k))


def has_c4_adjacent_c3(G):
    c3 = [edge_set(c) for c in cycles(G, 3)]
    if not c3:
        return False
    c4 = [edge_set(c) for c in cycles(G, 4)]
    return any(a & b for a in c4 for b in c3)


def has_config_f(G):
    deg = dict(G.degree())
    for c in cycles(G, 6):
        for rot in range(6):
            for d in (1, -1):
                lab = [c[(rot + d * i) % 6] for i in range(6)]
                if all(deg[x] == 4 for x in lab) and G.has_edge(lab[0], lab[4]):
                    return True
    return False


def write_graph(path, G, note=""):
    lines = []
    header = f"# {path.name}: {G.number_of_nodes()} vertices, {G.number_of_edges()} edges"
    if note:
        header += f" ({note})"
    lines.append(header)
    for u, v in sorted(tuple(sorted(e)) for e in G.edges()):
        lines.append(f"{u} {v}")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n")


def relabel_1based(G):
    return nx.relabel_nodes(G, {v: i + 1 for i, v in enumerate(sorted(G.nodes()))})


def build_corpus():
    corpus_dir = DATA / "corpus"
    corpus_dir.mkdir(parents=True, exist_ok=True)
    for old in corpus_dir.glob("*.txt"):
        old.unlink()

    stats = {}
    total_covers = 0
    for G in nx.graph_atlas_g()[1:]:
        n = G.number_of_nodes()
        if n < 2 or n > 7:
            continue
        if not nx.is_connected(G):
            continue
        if not nx.check_planarity(G)[0]:
            continue
        if has_c4_adjacent_c3(G):
            continue
        G1 = relabel_1based(G)
        idx = stats.setdefault(n, [0, 0])
        idx[0] += 1
        idx[1] += 2 ** G1.number_of_edges()
        total_covers += 2 ** G1.number_of_edges()
        write_graph(corpus_dir / f"n{n}_{idx[0]:03d}.txt", G1)

    print("corpus (connected, planar, no 4-cycle adjacent to a 3-cycle):")
    for n in sorted(stats):
        cnt, cov = stats[n]
        print(f"  n={n}: {cnt} graphs, sum 2^m = {cov}")
    print(f"  total graphs: {sum(v[0] for v in stats.values())}, "
          f"total s=2 covers: {total_covers}")


def build_named_fixtures():
    c4 = nx.cycle_graph(4)
    write_graph(DATA / "c4.txt", relabel_1based(c4), "4-cycle")

    c5 = nx.cycle_graph(5)
    write_graph(DATA / "c5.txt", relabel_1based(c5), "5-cycle")

    k4 = nx.complete_graph(4)
    write_graph(DATA / "k4.txt", relabel_1based(k4), "complete graph")

    k5 = nx.complete_graph(5)
    write_graph(DATA / "k5.txt", relabel_1based(k5), "complete graph, not planar")

    tree5 = nx.path_graph(5)
    write_graph(DATA / "tree5.txt", relabel_1based(tree5), "path")

    octa = nx.complete_multipartite_graph(2, 2, 2)
    # parts come out as {0,1},{2,3},{4,5}; relabel so antipodal pairs are
    # (1,4),(2,5),(3,6) and the hexagon 1-2-3-4-5-6 plus chord 1-5 is present
    octa = nx.relabel_nodes(octa, {0: 1, 1: 4, 2: 2, 3: 5, 4: 3, 5: 6})
    assert not octa.has_edge(1, 4) and octa.has_edge(1, 5) and octa.has_edge(1, 2)
    write_graph(DATA / "octahedron.txt", octa, "octahedron as K_{2,2,2}")

    chorded = nx.cycle_graph([1, 2, 3, 4, 5, 6])
    chorded.add_edge(1, 5)
    write_graph(DATA / "chorded_c6.txt", chorded, "6-cycle with chord 1-5")

    dodeca = nx.dodecahedral_graph()
    icosi = nx.line_graph(dodeca)
    icosi = nx.relabel_nodes(
        icosi, {e: i + 1 for i, e in enumerate(sorted(tuple(sorted(x)) for x in icosi.nodes()))})
    assert icosi.number_of_nodes() == 30 and icosi.number_of_edges() == 60
    assert all(d == 4 for _, d in icosi.degree())
    assert nx.check_planarity(icosi)[0]
    assert not cycles(icosi, 4), "line graph of the dodecahedron has no 4-cycles"
    assert not has_c4_adjacent_c3(icosi)
    assert has_config_f(icosi)
    write_graph(DATA / "icosidodecahedron.txt", icosi,
                "line graph of the dodecahedron; 4-regular planar, no 4-cycles")

    smoke = DATA / "smoke"
    smoke.mkdir(parents=True, exist_ok=True)
    for name in ("c5.txt", "tree5.txt", "chorded_c6.txt", "k4.txt"):
        (smoke / name).write_text((DATA / name).read_text())

    (DATA / "c4_oneswap.cover").write_text(
        "lists\n"
        "1: 1 2\n2: 1 2\n3: 1 2\n4: 1 2\n"
        "matchings\n"
        "1 2: 1->1, 2->2\n"
        "1 4: 1->2, 2->1\n"
        "2 3: 1->1, 2->2\n"
        "3 4: 1->1, 2->2\n")

    def caps_file(path, n, row):
        path.write_text("".join(f"{v}: {' '.join(str(x) for x in row)}\n"
                                for v in range(1, n + 1)))

    caps_file(DATA / "c4_11.caps", 4, (1, 1))
    caps_file(DATA / "c4_22.caps", 4, (2, 2))
    caps_file(DATA / "c5_22.caps", 5, (2, 2))
    caps_file(DATA / "k4_22.caps", 4, (2, 2))
    caps_file(DATA / "tree5_22.caps", 5, (2, 2))
    caps_file(DATA / "icosidodecahedron_22.caps", 30, (2, 2))
    caps_file(DATA / "icosidodecahedron_211.caps", 30, (2, 1, 1))
    print("named fixtures written")


def main():
    build_named_fixtures()
    build_corpus()
    return 0


if __name__ == "__main__":
    sys.exit(main())
