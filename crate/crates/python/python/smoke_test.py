"""Smoke test for the pycellforge extension module."""

import pycellforge as cf


def main():
    do = cf.build("dodecahedron")
    assert do.counts == [20, 30, 12]
    assert cf.classify(do)["class"] == "Sphere"

    corona = cf.construct("B", do)
    assert corona.counts == [600, 1200, 720, 120]
    assert cf.is_isomorphic(corona, cf.build("120cell"))
    assert cf.census(corona) == {"Do": 120}

    b6 = cf.build("barrel", i=6)
    assert cf.census(cf.construct("B", b6)) == {"Do": 132, "B_6": 10}

    poincare = cf.construct("quotient", do, twist=1)
    assert not poincare.is_regular
    assert poincare.counts == [5, 10, 6, 1]
    assert cf.construct("quotient", do, twist=3).counts == [1, 6, 6, 1]

    petersen = cf.construct("fold", do)
    assert petersen.counts == [10, 15, 6]
    assert not petersen.is_orientable()
    assert cf.classify(petersen)["class"] == "ProjectivePlane"

    back = cf.read(do.to_cxc())
    assert back.to_cxc() == do.to_cxc()

    records = cf.verify()
    assert all(r["passed"] for r in records), [r["name"] for r in records if not r["passed"]]
    print(f"ok: {len(records)} table rows pass")


if __name__ == "__main__":
    main()
