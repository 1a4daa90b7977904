import magical


def test_sl2_data():
    d = magical.sl2_data("A", 4, "2,2,1")
    assert d["wdd"] == [0, 1, 1, 0]
    assert d["sl2"]["n"] == {"0": 4, "1": 4, "2": 4}
    assert d["sl2"]["dim_g"] == 24


def test_classify():
    rows = magical.classify("su(2,3)")
    assert [r["status"]["verdict"] for r in rows] == ["OddMagical"]
    assert rows[0]["label"]["partition"] == [2, 2, 1]
    assert magical.classify("sp(2,2)") == []
    even = magical.classify("su(3,3)")
    assert even[0]["status"]["verdict"] == "EvenMagical"
    assert len(magical.classify("E6^-14")) == 2


def test_classify_family():
    rows = magical.classify_family("so*", 5)
    assert {r["form"]["SoStar"]["m"] for r in rows} >= {3, 4, 5}


def test_describe():
    d = magical.describe("su(2,2)")
    assert d["dim_g_real"] == 15
    assert (d["dim_h"], d["dim_m"], d["s"]) == (7, 8, 1)


def test_slodowy():
    reports = magical.slodowy("su(2,2)", "2,2", 2)
    assert reports and all(r["gap"] == 0 and r["expected_dim"] == 30 for r in reports)
    assert len(magical.slodowy("su(2,3)", "2,2,1", 2, all=True)) == 3


def test_errors():
    for call in (
        lambda: magical.slodowy("su(2,2)", "2,2", 1),
        lambda: magical.sl2_data("C", 2, "3,1"),
        lambda: magical.classify("su(2"),
    ):
        try:
            call()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    try:
        magical.classify("F4^4")
    except LookupError:
        pass
    else:
        raise AssertionError("expected LookupError")


def test_verify():
    report = magical.verify(3)
    assert report["max_rank"] == 3
    assert all(c["passed"] for c in report["checks"])


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print("ok", name)
