import json

import pytest

from rigikit import is_independent
from rigikit.enumeration import enumerate_regular
from rigikit.rigidity import CERT_DEPENDENT_COUNT
from rigikit.verify import (
    STATUS_FAIL,
    STATUS_PASS,
    STATUS_UNRESOLVED,
    VerificationReport,
    classify_flexible_circuits,
    default_seed,
    verify_edge_bound,
    verify_families,
)


def strip_time(payload: dict) -> dict:
    out = dict(payload)
    out.pop("wall_time_s")
    return out


class TestReportMechanics:
    def test_exit_codes(self):
        for status, code in [(STATUS_PASS, 0), (STATUS_FAIL, 1), (STATUS_UNRESOLVED, 2)]:
            r = VerificationReport(claim="x", status=status, seed=0, instances=0)
            assert r.exit_code() == code

    def test_status_precedence(self):
        from rigikit.verify import _finish
        import time

        t0 = time.perf_counter()
        r = _finish("x", 0, [{"ok": True}, {"ok": None}], t0)
        assert r.status == STATUS_UNRESOLVED
        r = _finish("x", 0, [{"ok": None}, {"ok": False}], t0)
        assert r.status == STATUS_FAIL
        r = _finish("x", 0, [{"ok": True}], t0)
        assert r.status == STATUS_PASS

    def test_default_seed_env(self, monkeypatch):
        monkeypatch.setenv("RIGIKIT_SEED", "12345")
        assert default_seed() == 12345

    def test_reports_reproducible(self):
        a = verify_families(3, seed=42)
        b = verify_families(3, seed=42)
        assert strip_time(a.to_json()) == strip_time(b.to_json())

    def test_classification_reproducible(self):
        a = classify_flexible_circuits(3, 7, seed=1)
        b = classify_flexible_circuits(3, 7, seed=1)
        assert strip_time(a[0].to_json()) == strip_time(b[0].to_json())
        assert a[1] == b[1] == []


class TestMutation:
    def test_corrupted_regular_graph_fails_sparsity(self):
        # adding any edge to a 6-regular graph on 10 vertices breaks the
        # d=4 count bound (31 > 30 = 4*10-10), so independence must fail
        g = next(iter(enumerate_regular(10, 6)))
        u, v = next(
            (u, v) for u in range(10) for v in range(u + 1, 10) if not g.has_edge(u, v)
        )
        bad = g.with_edge(u, v)
        ok, verdict = is_independent(bad, 4)
        assert ok is False
        assert verdict.certificate.kind == CERT_DEPENDENT_COUNT

    def test_failing_instance_fails_report(self):
        from rigikit.verify import _finish
        import time

        checks = [{"name": "good", "ok": True}, {"name": "bad", "ok": False}]
        r = _finish("mutated", 0, checks, time.perf_counter())
        assert r.status == STATUS_FAIL and r.exit_code() == 1


class TestScope:
    def test_classify_supported_dimensions(self):
        with pytest.raises(ValueError):
            classify_flexible_circuits(4, 9)
        with pytest.raises(ValueError):
            classify_flexible_circuits(5, 9, allow_long=True)
        with pytest.raises(ValueError):
            classify_flexible_circuits(3, 10)

    def test_small_windows(self):
        rep, found = classify_flexible_circuits(3, 7, seed=0)
        assert rep.status == STATUS_PASS and found == []
        rep, found = classify_flexible_circuits(3, 8, seed=0)
        assert rep.status == STATUS_PASS and len(found) == 1

    def test_d4_long_path_runs_on_small_windows(self):
        # circuits on at most d+3 vertices are rigid, so nothing shows up
        rep, found = classify_flexible_circuits(4, 7, seed=0, allow_long=True)
        assert rep.status == STATUS_PASS and found == []

    def test_edge_bound_formula_only(self):
        # supply a fake classification so the unit test stays fast
        from rigikit import canonical_code
        from rigikit.constructions import build_glued_cliques

        b32 = canonical_code(build_glued_cliques(3, 2).graph).decode("ascii")
        r = verify_edge_bound(8, seed=0, classification=[b32])
        assert r.status == STATUS_PASS
        counts = [c for c in r.details if c["name"].startswith("edge-count")]
        assert [c["edges"] for c in counts] == [18, 26, 35, 45, 56, 68]
