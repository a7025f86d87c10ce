"""Smoke test for the hivelr extension module.

Build and run:
    cargo build -p hive-lr-py --features extension-module
    cp target/debug/libhivelr.so python/hivelr.so
    python3 python/smoke_test.py
"""

import hivelr


def main():
    assert hivelr.lr_coefficient("2,1", "1", "1,1") == 1
    args = ([4, 3, 2, 1], [3, 2, 1], [2, 1, 1])
    assert hivelr.lr_coefficient(*args, "hive") == hivelr.lr_coefficient(*args, "tableau") == 3
    for method in ("hive", "tableau"):
        assert hivelr.lr_coefficient("3,2,1", "2,1", "2,1", method) == 2

    assert hivelr.product("1", "1") == [([2], 1), ([1, 1], 1)]
    terms = dict((tuple(p), c) for p, c in hivelr.product("2,1", "2,1"))
    assert terms[(3, 2, 1)] == 2 and sum(terms.values()) == 8

    skew = dict((tuple(p), c) for p, c in hivelr.skew("6^2,4^2,2^2/3^3"))
    assert len(skew) == 31 and skew[(5, 4, 3, 2, 1)] == 2
    assert hivelr.skew(("2,1", "1"), "tableau") == [([2], 1), ([1, 1], 1)]

    p = hivelr.Partition("9,9,6,6,6")
    assert p.complement(9, 5).parts == [3, 3, 3]
    assert hivelr.Partition([5, 5, 2]).boundary_segments(9, 5) == [2, 2, 1, 3, 2, 4]
    assert p.conjugate().conjugate() == p
    s = hivelr.SkewShape("3,2/1")
    assert s.size() == 4 and s.is_basic()

    assert hivelr.mf_product("2,1", "2,1")[0] is False
    assert hivelr.mf_product("1", "5,3") == (True, ["P1", "P3"])
    assert hivelr.mf_skew("9^2,6^3/5^2,2")[0] is True
    assert hivelr.product_multiplicity_witness("2,1", "2,1") == ([3, 2, 1], 2)

    w = hivelr.witness("Q1", a=2, b=1, c=2, d=1)
    assert w["constructed"] == [3, 2, 1] and w["coefficient"] == 2 and w["verified"]

    hives = hivelr.hives("2,1", "1", "1,1", 2)
    assert hives == [[[0], [2, 1], [3, 3, 2]]]
    assert hivelr.duality("4,2", "2,1", "2,1")

    assert hivelr.verify("products", 2, 2) == (25, 25, 0)

    try:
        hivelr.Partition("1,2")
    except ValueError:
        pass
    else:
        raise AssertionError("non-decreasing parts accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
