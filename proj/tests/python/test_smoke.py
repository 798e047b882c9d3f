import lcais


A = [3, 1, 4, 5, 2, 4, 5, 1]
B = [4, 2, 3, 1, 2, 5, 3, 1]


def test_all_solvers_agree_on_the_worked_instance():
    for algo in ("brute", "dp3", "dc", "sparse"):
        w = lcais.solve(A, B, 3, algo=algo)
        assert len(w) == 4
        assert lcais.validate_witness(w, A, B, 3)
        assert lcais.witness_fault(w, A, B, 3) is None


def test_validators():
    assert lcais.is_almost_increasing([3, 1, 2, 1], 3)
    assert not lcais.is_almost_increasing([5, 1], 3)
    assert lcais.is_subsequence([3, 1, 2, 1], A)
    bad = lcais.Witness([(2, 5, 2), (4, 3, 1)])
    assert lcais.witness_fault(bad, A, B, 3) is not None


def test_match_statistics():
    assert len(lcais.compute_matches(A, B)) == 12
    stats = lcais.StatsRecord()
    lcais.sparse_lcais(A, B, 3, stats)
    assert stats.range_queries == 12


def test_solvers_match_brute_force_on_random_instances():
    for seed in range(40):
        a, b = lcais.generate(9, 9, 6, "uniform", seed)
        delta = seed % 4
        want = len(lcais.brute_force_lcais(a, b, delta))
        assert len(lcais.lcais_divide_conquer(a, b, delta)) == want
        assert len(lcais.sparse_lcais(a, b, delta)) == want
        assert len(lcais.lcais_reference(a, b, delta)) == want


def test_generator_is_deterministic():
    x = lcais.generate(50, 50, 8, "blocks", 123)
    y = lcais.generate(50, 50, 8, "blocks", 123)
    assert x == y


def test_lcs_baseline():
    w = lcais.lcs([1, 2, 3, 2, 4, 1, 2], [2, 4, 3, 1, 2, 1])
    assert len(w) == 4
    assert lcais.compute_l([1, 2, 3], [1, 2, 3]) == [0, 1, 2, 3]


def test_size_cutoff_raises():
    big = [1] * 23
    try:
        lcais.brute_force_lcais(big, big, 1)
    except lcais.InstanceTooLarge:
        pass
    else:
        raise AssertionError("expected InstanceTooLarge")
