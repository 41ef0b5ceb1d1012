"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` (the lines also appear in the
terminal summary) or ``python tests/test_acceptance.py``.
"""

import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hardcore import verify as V  # noqa: E402
from hardcore.families import build  # noqa: E402
from hardcore.graph import path  # noqa: E402
from hardcore.model import size_distribution  # noqa: E402
from hardcore.sampler import ChainConfig, glauber_run  # noqa: E402
from hardcore.symmetrization import symmetrize_to_multipartite  # noqa: E402

F = Fraction
GRID = [F(1, 3), F(1, 2), F(1), F(2), F(5)]
SYM_GRID = [F(1, 2), F(1), F(2)]
P_GRID = [F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(3, 4)]

RESULTS: list[str] = []


def _record(number: int, ok: bool, detail: str) -> bool:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line)
    return ok


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def _summary(reports):
    return ", ".join(f"{r.check_id} {r.verdict} ({r.checked} cells, "
                     f"{len(r.counterexamples)} cex)" for r in reports)


def criterion_1():
    rep, secs = _timed(lambda: V.check_profile_oracle(6, labeled_dedup_max=6))
    ok = rep.passed and secs < 30 and "{1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}" in rep.notes[0]
    return _record(1, ok, f"profile oracle over n<=6, {secs:.1f}s (<30s); {rep.notes[0]}")


def criterion_2():
    rep, secs = _timed(lambda: V.check_theorem1(6, GRID))
    return _record(2, rep.passed and secs < 120,
                   f"{_summary([rep])}, equality only at Z(n,alpha), {secs:.1f}s (<120s)")


def criterion_3():
    rep = V.check_theorem2(6, GRID)
    return _record(3, rep.passed, _summary([rep]))


def criterion_4():
    rep = V.check_corollary3(6, GRID)
    hit = [w for w in rep.extremal_witnesses if w["n"] == 5 and w["alpha"] == 2]
    ok = rep.passed and [w["value"] for w in hit] == [12]
    return _record(4, ok, f"{_summary([rep])}; n=5, alpha=2, lambda=1 count bound "
                          f"{[w['value'] for w in hit]}")


def criterion_5():
    reps = [V.check_theorem4(6, GRID), V.check_theorem5(6, GRID)]
    return _record(5, all(r.passed for r in reps), _summary(reps))


def criterion_6():
    rep = V.check_lemma_var_de(12, P_GRID)
    return _record(6, rep.passed, f"{_summary([rep])} incl. coupling law equality")


def criterion_7():
    reps = [V.check_section31(5, GRID), V.check_section32(5, GRID)]
    return _record(7, all(r.passed for r in reps), _summary(reps))


def criterion_8():
    rep = V.check_symmetrization(6, SYM_GRID)
    tr = symmetrize_to_multipartite(path(4), 1)
    worked = tr.betas == [F(5, 4), F(4, 3)] and tr.final_parts == (2, 2)
    return _record(8, rep.passed and worked,
                   f"{_summary([rep])}; P_4 worked example {'ok' if worked else 'WRONG'}")


SAMPLER_CASES = [(spec, lam) for spec in ("kdd:3", "Z:6,2", "path:5") for lam in (F(1, 2), F(1))]


def _sampler_case(spec, lam):
    g = build(spec)
    cfg = ChainConfig(lam, samples=1_000_000, burn_in=10_000, seed=2024)
    est, secs = _timed(lambda: glauber_run(g, cfg))
    rerun = glauber_run(g, cfg)
    d = size_distribution(g, lam)
    z_mean = (est.mean - float(d.mean())) / est.se_mean
    z_var = (est.var - float(d.variance())) / est.se_var
    ok = abs(z_mean) < 4 and abs(z_var) < 4 and rerun == est and secs < 60
    return ok, f"{spec} lambda={lam}: z_mean={z_mean:+.2f} z_var={z_var:+.2f} {secs:.1f}s"


def criterion_9():
    results = [_sampler_case(spec, lam) for spec, lam in SAMPLER_CASES]
    ok = all(r[0] for r in results)
    return _record(9, ok, "; ".join(r[1] for r in results) + "; reruns bit-identical")


def criterion_10():
    reps = [V.check_free_energy_bounds(2, 6, GRID), V.check_free_energy_bounds(3, 8, GRID)]
    return _record(10, all(r.passed for r in reps), _summary(reps) + ", slack 1e-9")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 11)])
def test_acceptance(criterion):
    assert criterion()


if __name__ == "__main__":
    outcomes = [c() for c in CRITERIA]
    print(f"{sum(outcomes)}/{len(outcomes)} criteria pass")
    sys.exit(0 if all(outcomes) else 1)
