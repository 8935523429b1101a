"""Smoke test for the gallai extension module.

Build and install first:  pip install --no-build-isolation -e crates/python
"""

import json

import gallai


def main():
    assert gallai.gr_value(5, [4, 4, 4], "cycle") == 18
    assert gallai.gr_k_family(6, 2, "cycle") == (17, "proven")
    assert gallai.r_path_cycle(4, 3) == 7

    w = gallai.lower_bound_witness(5, [4, 4], "cycle")
    assert (w.n, w.k) == (13, 2)
    assert w.is_gallai()
    report = gallai.check_bad_coloring(w, ["C10", "C10"])
    assert report.verdict == "verified", str(report)

    rainbow = gallai.ColoredComplete(3, 3, [(0, 1, 1), (0, 2, 2), (1, 2, 3)])
    assert rainbow.find_rainbow_triangle() == (0, 1, 2)
    try:
        gallai.ColoredComplete(3, 2, [(0, 1, 1), (0, 2, 1)])
    except gallai.GallaiError as e:
        assert "(1, 2)" in str(e)
    else:
        raise AssertionError("missing edge accepted")

    k10 = gallai.ColoredComplete.monochromatic(10, 1, 1)
    cycle = gallai.find_mono_cycle(k10, 1, 10)
    assert cycle is not None and len(cycle.vertices) == 10

    c = gallai.random_gallai(24, 4, 3, 7)
    assert c.find_rainbow_triangle() is None
    g = gallai.gallai_partition(c)
    assert sorted(v for part in g.parts for v in part) == list(range(24))
    assert len(g.inter_colors) <= 2

    assert gallai.exhaustive_ramsey2("P3", "C6", 6).verdict == "verified"
    below = gallai.exhaustive_ramsey2("P3", "C6", 5)
    assert below.verdict == "refuted" and below.coloring.n == 5

    point = gallai.verify_gr_point(3, [1, 0])
    assert point.verdict == "verified" and len(point.parts) == 2
    assert json.loads(point.to_json())["verdict"] == "verified"

    found = gallai.search_bad_gallai(13, ["C10", "C10"], threads=2)
    assert found.verdict == "refuted"
    assert gallai.check_bad_coloring(found.coloring, ["C10", "C10"]).verdict == "verified"

    text = gallai.Certificate.plain(w).serialize()
    cert = gallai.Certificate.parse(text)
    assert cert.serialize() == text and cert.coloring == w
    assert cert.verify().verdict == "verified"

    print("gallai smoke test passed")


if __name__ == "__main__":
    main()
