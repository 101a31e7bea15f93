"""The eleven acceptance criteria, each run at default sizes under a 60 s budget.

Every test prints one ``[PASS]``/``[FAIL]`` line; the lines are repeated in
the terminal summary under "acceptance criteria".
"""
import json
import time

import pytest

from prodspec import properties as props
from prodspec.cli import main
from prodspec.dsl import parse
from prodspec.properties import PROPERTIES, Property, RunConfig, expect, run_property

SEED = 7
BUDGET_S = 60.0
_reports = {}


def report_for(pid):
    if pid not in _reports:
        _reports[pid] = run_property(pid, RunConfig(seed=SEED))
    return _reports[pid]


def generated(pid):
    prop = PROPERTIES[pid]
    return list(props.instances(prop, props.resolve_config(prop, RunConfig(seed=SEED))))


def judge(acceptance_line, number, title, pids, minimum, extra=None, status="pass"):
    start = time.perf_counter()
    problems = []
    counts = []
    for pid in pids:
        rep = report_for(pid)
        counts.append(f"{pid} {rep.status} {rep.checked}/{rep.trials}")
        if rep.status != status:
            problems.append(f"{pid}: status {rep.status}: {rep.counterexample}")
        if rep.aborted:
            problems.append(f"{pid}: {len(rep.aborted)} aborted instance(s)")
        if rep.checked < minimum.get(pid, 0):
            problems.append(f"{pid}: only {rep.checked} checked, need {minimum[pid]}")
    if extra is not None:
        problems += extra()
    seconds = time.perf_counter() - start
    if seconds > BUDGET_S:
        problems.append(f"took {seconds:.1f} s, budget {BUDGET_S:.0f} s")
    ok = not problems
    acceptance_line(number, title, ok, seconds, "; ".join(counts) if ok else problems[0])
    assert ok, "\n".join(problems)


def test_criterion_01_spectrum_oracle(acceptance_line):
    def sizes():
        bad = [i for i in generated("spec-oracle") if props.size_of(parse(i["ring"])) > 32]
        return [f"instance above 32 elements: {bad[0]}"] if bad else []
    judge(acceptance_line, 1, "spectrum equals the prime ideals among all ideals",
          ["spec-oracle"], {"spec-oracle": 300}, sizes)


def test_criterion_02_tame_structure(acceptance_line):
    judge(acceptance_line, 2, "every prime of a product is tame and round-trips",
          ["tame-structure"], {"tame-structure": 200})


def test_criterion_03_wild_empty(acceptance_line):
    judge(acceptance_line, 3, "direct sum ideal is the whole ring, no wild prime (vacuous)",
          ["wild-empty"], {"wild-empty": 100}, status="vacuous")


def test_criterion_04_ultrafilter_embedding(acceptance_line):
    def coverage():
        insts = generated("ultrafilter-embedding")
        arities = {len(parse(i["ring"]).factors) for i in insts}
        out = [] if arities == {2, 3, 4} else [f"index set sizes seen: {sorted(arities)}"]
        few = [i for i in insts if len({tuple(c) for c in i["choices"]}) < 3]
        return out + ([f"fewer than 3 base choices: {few[0]}"] if few else [])
    judge(acceptance_line, 4, "M -> M* is an injective, continuous embedding",
          ["ultrafilter-embedding"], {"ultrafilter-embedding": 60}, coverage)


def test_criterion_05_filter_quotient_iso(acceptance_line):
    judge(acceptance_line, 5, "R/I_F is isomorphic to T_F^-1 R for every proper principal filter",
          ["filter-quotient-iso"], {"filter-quotient-iso": 100})


def test_criterion_06_zero_dimension(acceptance_line):
    def lengths():
        got = sorted(i["length"] for i in generated("nilpotency-growth"))
        return [] if got == list(range(2, 9)) else [f"tower lengths {got}"]
    judge(acceptance_line, 6, "radicals of products, dimension 0, nilpotency growth N = 2..8",
          ["zero-dim", "nilpotency-growth"], {"zero-dim": 100, "nilpotency-growth": 7}, lengths)


def test_criterion_07_components(acceptance_line):
    judge(acceptance_line, 7, "components and max-regular ideals of products",
          ["components"], {"components": 200})


def test_criterion_08_avoidance(acceptance_line):
    def fixtures_and_cap():
        insts = generated("avoidance-qb")
        out = []
        if not any(i["ring"] == "F2xy2" and i.get("expect") is False for i in insts):
            out.append("F2xy2 fixture missing")
        if not any(i.get("mode") == "product" for i in insts):
            out.append("no product-of-avoidance-rings instance")
        if not any("up to 4 ideals" in n for n in report_for("avoidance-qb").notes):
            out.append("cover cap not documented in the report")
        return out
    judge(acceptance_line, 8, "brute-force avoidance agrees with the local criterion",
          ["avoidance-qb"], {"avoidance-qb": 100}, fixtures_and_cap)


def test_criterion_09_induced_homs(acceptance_line):
    judge(acceptance_line, 9, "classification commutes with pulling back along prod phi_k",
          ["induced-hom"], {"induced-hom": 100})


def test_criterion_10_lying_over(acceptance_line):
    judge(acceptance_line, 10, "every prime of the source of an injective map has a prime over it",
          ["lying-over"], {"lying-over": 100})


def _strip_times(payload):
    for rep in payload["reports"]:
        rep.pop("wallTimeMs", None)
    return json.dumps(payload, sort_keys=True)


def test_criterion_11_determinism_and_cli(acceptance_line, capsys, monkeypatch):
    # reference run of every property (shared with criteria 1-10 when they ran first)
    reference = [report_for(pid).to_dict() for pid in PROPERTIES]
    start = time.perf_counter()
    problems = []
    code = main(["verify", "all", "--seed", str(SEED), "--json"])
    first = json.loads(capsys.readouterr().out)
    if code != 0:
        problems.append(f"verify all exited {code} with every property passing")
    second = {"schema": first["schema"], "seed": SEED, "status": first["status"], "reports": reference}
    if _strip_times(first) != _strip_times(second):
        problems.append("two runs with the same seed differ")
    # a failing property must turn the exit code to 1
    failing = Property("always-fails", "fails", lambda rng, cfg: {"ring": "Z/2"},
                       lambda inst, cfg: expect(False, "forced failure"), trials=1, max_size=4)
    monkeypatch.setattr(props, "PROPERTIES", {"parser-roundtrip": PROPERTIES["parser-roundtrip"]})
    monkeypatch.setitem(props.PROPERTIES, "always-fails", failing)
    import prodspec.cli as cli
    monkeypatch.setattr(cli, "PROPERTIES", props.PROPERTIES)
    code_fail = main(["verify", "all", "--seed", "1", "--json"])
    payload = json.loads(capsys.readouterr().out)
    if code_fail != 1 or payload["status"] != "fail":
        problems.append(f"verify all with a failing property exited {code_fail}")
    if main(["verify", "no-such-property"]) != 2:
        problems.append("unknown property did not exit 2")
    capsys.readouterr()
    seconds = time.perf_counter() - start
    if seconds > BUDGET_S:
        problems.append(f"took {seconds:.1f} s, budget {BUDGET_S:.0f} s")
    ok = not problems
    acceptance_line(11, "same seed gives identical reports; verify all exit codes 0/1/2", ok, seconds,
                    "" if ok else problems[0])
    assert ok, "\n".join(problems)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
