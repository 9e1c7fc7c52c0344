"""Acceptance criteria, one test per criterion.

Each test records a ``PASS``/``FAIL`` line (shown in the pytest terminal
summary); ``python tests/test_acceptance.py`` runs them directly and
prints the same lines.
"""

import json
import os
import subprocess
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

import oracles  # noqa: E402
from helpers import ACCEPTANCE_LINES  # noqa: E402
from latshell.admissibility import (  # noqa: E402
    RisingChainDefect,
    check_admissible_with,
    enumerate_natural_labelings,
    gamma_labeling,
)
from latshell.corpus import FIXTURE_NAMES, check_claims, corpus, enumerate_lattices, fixture, random_dismantlable  # noqa: E402
from latshell.errors import PreconditionFailed  # noqa: E402
from latshell.lattice import is_ranked  # noqa: E402
from latshell.predicates import dismantling_sequence, is_interval_connected, is_planar, is_rank_connected  # noqa: E402
from latshell.shelling import construct_el, search_el, verify_el  # noqa: E402

FROZEN_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15, 7: 53, 8: 222}
_CORPUS8 = None


def corpus8():
    global _CORPUS8
    if _CORPUS8 is None:
        _CORPUS8 = list(corpus(8))
    return _CORPUS8


def report(number, title, ok, detail, seconds, budget=None):
    within = budget is None or seconds < budget
    status = "PASS" if ok and within else "FAIL"
    limit = f" (budget {budget:g}s)" if budget else ""
    line = f"criterion {number} {status}: {title}; {detail}; {seconds:.2f}s{limit}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line
    assert within, line


def test_criterion_1_fixture_contract():
    t = time.perf_counter()
    bad = []
    checked = 0
    for name in FIXTURE_NAMES:
        for claim, (want, got) in check_claims(fixture(name)).items():
            checked += 1
            if want != got:
                bad.append(f"{name}.{claim}")
    F1b = fixture("F1b").lattice
    el_ok = bool(verify_el(F1b, construct_el(F1b)))
    ok = not bad and el_ok
    report(1, "fixture claims", ok, f"{checked} claims, mismatches {bad or 'none'}", time.perf_counter() - t, 10)


def test_criterion_2_constructed_el():
    t = time.perf_counter()
    failures = []
    done = 0
    for L in corpus8():
        if is_rank_connected(L) and dismantling_sequence(L):
            try:
                if not verify_el(L, construct_el(L)):
                    failures.append(L.cover_list())
            except Exception as exc:  # any exception counts against the criterion
                failures.append((L.cover_list(), repr(exc)))
            done += 1
    randoms = 0
    seed = 0
    while randoms < 100:
        n = 4 + seed % 11
        L, _ = random_dismantlable(n, seed, corner_bias=0.85)
        seed += 1
        if not is_rank_connected(L):
            continue
        randoms += 1
        try:
            if not verify_el(L, construct_el(L)):
                failures.append(L.cover_list())
        except Exception as exc:
            failures.append((L.cover_list(), repr(exc)))
    report(
        2, "rank-connected dismantlable lattices get a verified EL-labeling", not failures and done > 0,
        f"{done} corpus + {randoms} random (n<=14) instances, {len(failures)} failures",
        time.perf_counter() - t, 300,
    )


def test_criterion_3_interval_implies_rank():
    t = time.perf_counter()
    instances = failures = 0
    for L in corpus8():
        if is_ranked(L) and is_interval_connected(L, 2):
            instances += 1
            failures += not is_rank_connected(L)
    report(
        3, "interval-connected implies rank-connected", failures == 0 and instances > 0,
        f"{instances} instances, {failures} failures", time.perf_counter() - t, 120,
    )


def test_criterion_4_converse_fails():
    t = time.perf_counter()
    witnesses = [L for L in corpus8() if is_rank_connected(L) and not is_interval_connected(L)]
    F1a = fixture("F1a").lattice
    f1a = bool(is_rank_connected(F1a)) and not is_interval_connected(F1a)
    smallest = min(L.n for L in witnesses) if witnesses else None
    report(
        4, "rank-connected but not interval-connected witnesses", bool(witnesses) and f1a,
        f"{len(witnesses)} in corpus (smallest n={smallest}), F1a qualifies={f1a}", time.perf_counter() - t,
    )


def test_criterion_5_planar_dismantlable():
    t = time.perf_counter()
    planar = failures = 0
    for L in corpus8():
        if is_planar(L):
            planar += 1
            failures += not dismantling_sequence(L)
    report(
        5, "planar lattices are dismantlable", failures == 0 and planar > 0,
        f"{planar} planar lattices, {failures} failures", time.perf_counter() - t,
    )


def test_criterion_6_search_oracle():
    t = time.perf_counter()
    checked = agree = search_only = 0
    problems = []
    for L in corpus8():
        if len(L.covers) > 12:
            continue
        checked += 1
        if not is_ranked(L):
            # neither side applies: verify_el needs a ranked lattice
            with pytest.raises(PreconditionFailed):
                search_el(L)
            agree += 1
            continue
        found = search_el(L)
        if found is not None and not oracles.brute_el(L.n, sorted(L.covers), found):
            problems.append(("search replay", L.cover_list()))
        constructed = None
        if is_rank_connected(L) and dismantling_sequence(L):
            constructed = construct_el(L)
            if not verify_el(L, constructed):
                problems.append(("construct replay", L.cover_list()))
        if (found is not None) == (constructed is not None):
            agree += 1
        elif found is not None:
            search_only += 1
        else:
            problems.append(("search missed a constructed case", L.cover_list()))
    report(
        6, "search_el and construct_el agree", not problems,
        f"{checked} lattices with <=12 covers, {agree} agree, {search_only} search-only (logged), "
        f"{len(problems)} problems", time.perf_counter() - t,
    )


def test_criterion_7_gamma_anchors():
    t = time.perf_counter()
    L = fixture("F1b").lattice
    total = tied = bad = 0
    for om in enumerate_natural_labelings(L):
        total += 1
        g = gamma_labeling(L, om)
        if g[(10, 11)] != om[1] or g[(7, 10)] != om[6]:
            bad += 1
        if om[1] == om[2]:
            tied += 1
            v = check_admissible_with(L, om)
            if v or not isinstance(v.evidence, RisingChainDefect) or (v.evidence.x, v.evidence.y) != (0, 5) \
                    or len(v.evidence.chains) < 2:
                bad += 1
    report(
        7, "gamma anchors on the 12-element fixture", bad == 0 and tied > 0,
        f"{total} natural labelings, {tied} with omega(1)=omega(2), {bad} mismatches", time.perf_counter() - t,
    )


def test_criterion_8_enumeration_counts():
    t = time.perf_counter()
    got = {n: len(list(enumerate_lattices(n))) for n in FROZEN_COUNTS}
    brute = {n: len(oracles.brute_lattice_classes(n)) for n in range(1, 7)}
    ok = all(got[n] == brute[n] for n in brute) and got == FROZEN_COUNTS
    report(
        8, "lattice counts per size", ok,
        f"counts {list(got.values())}, brute force n<=6 {list(brute.values())}", time.perf_counter() - t,
    )


def _cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "latshell", *argv], capture_output=True)
    return proc.returncode, proc.stdout


def test_criterion_9_determinism(tmp_path):
    t = time.perf_counter()
    files = {}
    for name in FIXTURE_NAMES:
        code, out = _cli("fixture", name)
        files[name] = tmp_path / f"{name}.json"
        files[name].write_bytes(out)
    data = json.loads(files["F1b"].read_text())
    data["omega"] = [[1, 1], [2, 1], [3, 2], [4, 2], [6, 2], [7, 2]]
    labeled = tmp_path / "F1b_omega.json"
    labeled.write_text(json.dumps(data))
    commands = [["fixture", "F1b"]]
    for name in FIXTURE_NAMES:
        commands += [["check", str(files[name])], ["render", str(files[name])]]
    commands += [
        ["shell", str(files["F1b"]), "--construct"],
        ["shell", str(files["F1d"]), "--construct"],
        ["admissible", str(files["F1b"])],
        ["admissible", str(labeled), "--with-omega"],
        ["corpus", "--enumerate", "6", "--cross-check", "--search"],
        ["corpus", "--random", "10", "8", "42", "--cross-check"],
    ]
    differ = [c[0] for c in commands if _cli(*c) != _cli(*c)]
    report(
        9, "byte-identical output across runs", not differ,
        f"{len(commands)} commands run twice, differing: {differ or 'none'}", time.perf_counter() - t,
    )


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                if "tmp_path" in fn.__code__.co_varnames[: fn.__code__.co_argcount]:
                    with tempfile.TemporaryDirectory() as d:
                        fn(Path(d))
                else:
                    fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
