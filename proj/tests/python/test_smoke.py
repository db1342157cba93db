import itertools

import pytest

import sdcodes


def mat_mul(a, b, p):
    return [[sum(x * y for x, y in zip(row, col)) % p for col in zip(*b)] for row in a]


def transpose(a):
    return [list(c) for c in zip(*a)]


def brute_min_weight(rows, p):
    best = None
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        if not any(coeffs):
            continue
        word = [sum(c * r[j] for c, r in zip(coeffs, rows)) % p for j in range(len(rows[0]))]
        w = sum(1 for x in word if x)
        best = w if best is None else min(best, w)
    return best


def test_unit_code_and_roots():
    a, b = sdcodes.roots_of_minus_one(13)
    assert {a, b} == {5, 8}
    c = sdcodes.SymmetricSD.unit(13, 5)
    assert c.half_n == 1
    assert c.generator == [[1, 5]]
    assert c.code().is_self_dual()


def test_extend_reduce_round_trip():
    base = sdcodes.SymmetricSD.unit(13, 5)
    steps = sdcodes.admissible_steps(base, 5)
    assert steps
    for alpha, gamma, x in steps:
        big = sdcodes.extend(base, alpha, gamma, x, check_identities=True)
        a = big.a
        assert a == transpose(a)
        assert mat_mul(a, a, 13) == [[12 if i == j else 0 for j in range(2)] for i in range(2)]
        back, step = sdcodes.reduce(big, alpha)
        assert back == base
        assert step == (alpha, gamma, x)


def test_min_weight_matches_brute_force():
    result = sdcodes.search_chain(sdcodes.SymmetricSD.unit(5, 2), 10, beam=2, samples=50, seed=4)
    code = result["code"].code()
    assert (code.n, code.k, code.p) == (10, 5, 5)
    fast = sdcodes.min_weight(code)
    assert fast["exact"]
    assert fast["min_weight"] == brute_min_weight(code.generator, 5)
    assert code.contains(fast["witness"])

    entry = sdcodes.catalog_entry("A_5^{16}")
    assert sdcodes.min_weight_exhaustive(entry["code"])["min_weight"] == entry["d"] == 6


def test_qr_extended():
    code, kind, border = sdcodes.qr_extended(23, 19)
    assert kind == "self-dual"
    assert (code.n, code.k) == (20, 10)
    assert code.is_self_dual()
    assert sdcodes.min_weight(code)["min_weight"] == 10
    with pytest.raises(sdcodes.PreconditionError):
        sdcodes.qr_extended(13, 5)


def test_equivalence_and_fingerprint():
    code = sdcodes.catalog_entry("A_5^{16}")["code"]
    perm, signs = sdcodes.random_transform(5, 16, seed=3)
    moved = sdcodes.apply_transform(code, perm, signs)
    assert sdcodes.fingerprint(moved) == sdcodes.fingerprint(code)
    small = sdcodes.LinearCode(5, [[1, 0, 2, 0], [0, 1, 0, 2]])
    perm, signs = sdcodes.random_transform(5, 4, seed=9)
    answer, witness = sdcodes.is_equivalent(small, sdcodes.apply_transform(small, perm, signs))
    assert answer == "yes"
    assert sdcodes.apply_transform(small, *witness) == sdcodes.apply_transform(small, perm, signs)


def test_code_files(tmp_path):
    code = sdcodes.circulant_code(13, [5, 0])
    path = str(tmp_path / "c.code")
    sdcodes.write_code_file(path, code, [("source", "test")])
    back, meta = sdcodes.read_code_file(path)
    assert back.generator == code.generator
    assert meta == [("source", "test")]
    (tmp_path / "bad.code").write_text("13 4 2\n1 0 1\n")
    with pytest.raises(sdcodes.ParseError):
        sdcodes.read_code_file(str(tmp_path / "bad.code"))


def test_catalog_verification():
    failures = {(l["entry"], l["check"]) for l in sdcodes.verify_catalog() if not l["pass"]}
    assert failures == {("A_5^{18}", "symmetric"), ("A_5^{18}", "self_dual")}
