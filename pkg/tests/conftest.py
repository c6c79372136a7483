import random

from hominf.complexes import SimplicialComplex


def random_clique_complex(rng: random.Random, n_vertices: int, edge_prob: float,
                          max_dim: int = 3, max_simplices: int = 200) -> SimplicialComplex:
    """Clique complex of a G(n, p) graph, truncated at max_dim.

    Retries with sparser graphs until the total simplex count fits the
    requested budget, so callers get a usable complex for any seed.
    """
    while True:
        adj = {v: set() for v in range(n_vertices)}
        for u in range(n_vertices):
            for v in range(u + 1, n_vertices):
                if rng.random() < edge_prob:
                    adj[u].add(v)
                    adj[v].add(u)
        simplices = {0: [(v,) for v in range(n_vertices)]}
        current = [(u, v) for u in range(n_vertices) for v in sorted(adj[u]) if v > u]
        d = 1
        total = n_vertices + len(current)
        while current and d <= max_dim:
            simplices[d] = [tuple(s) for s in current]
            nxt = []
            for s in current:
                common = set.intersection(*(adj[v] for v in s))
                for w in sorted(common):
                    if w > s[-1]:
                        nxt.append(s + (w,))
            current = nxt
            d += 1
            total += len(current)
        if total <= max_simplices:
            return SimplicialComplex(n_vertices, simplices, validate=False)
        edge_prob *= 0.7
