"""Smoke test for the zforce extension module.

Build and install first, e.g. ``maturin develop -m crates/python/Cargo.toml``.
"""

from fractions import Fraction

import zforce


def main():
    p = zforce.Graph.family("petersen")
    assert p.n == 10 and len(p.edges()) == 15
    assert p.girth() == 5

    z, witness = zforce.zero_forcing_number(p)
    assert z == 5 and zforce.is_zero_forcing_set(p, witness)

    assert zforce.expected_size(p) == Fraction(81, 14)

    run = zforce.random_zfs(p, trials=2000, seed=1)
    assert run["claim_held"] and zforce.is_zero_forcing_set(p, run["initial"])

    greedy = zforce.greedy_zfs(p)
    assert greedy["size"] <= 5

    ext = zforce.extension_zfs(p)
    assert zforce.is_zero_forcing_set(p, ext["initial"])

    report = zforce.bounds(p)
    assert report["exact"]["value"] == 5 and not report["violations"]

    g = zforce.Graph.from_graph6(p.to_graph6())
    assert g.edges() == p.edges()
    assert zforce.closure(g, [0]) == [0]
    assert zforce.is_zero_forcing_set(g, zforce.permutation_to_set(g, list(range(10))))

    try:
        zforce.Graph(3, [(0, 3)])
    except ValueError:
        pass
    else:
        raise AssertionError("out-of-range edge accepted")

    print("python smoke test ok")


if __name__ == "__main__":
    main()
