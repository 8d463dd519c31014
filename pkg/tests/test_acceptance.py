"""Acceptance gate: the seven headline properties, one test each.

Every test prints ``[criterion N] PASS`` or ``[criterion N] FAIL`` (run with
``-s`` to see the lines live; they also appear in captured output).  Criteria
with a stated runtime budget assert it.
"""

import random
import time
from contextlib import contextmanager

from railcirc import (ACCEPT, FLATTENED, build_eq_classifier,
                      check_semantic_monotone, compile_tm,
                      compile_tm_flattened, dual_rail_transform,
                      enumerate_monotone_functions, eq_truth_table, evaluate,
                      exhaustive_equiv, flatten_bits, is_structurally_monotone,
                      parse_tm, run, size_report, stats, stream_flatten)
from railcirc.bitsim import evaluate_masks, full_mask, input_masks
from railcirc.cli import main

from helpers import fixture_text, one_hot_report, random_circuit


@contextmanager
def criterion(num, title, budget=None):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        if budget is not None and elapsed >= budget:
            raise AssertionError(
                f"took {elapsed:.2f}s, budget is {budget:.0f}s")
    except BaseException:
        print(f"[criterion {num}] FAIL {title}")
        raise
    print(f"[criterion {num}] PASS {title} ({elapsed:.2f}s)")


def test_criterion_1_monotone_census_excludes_eq(capsys):
    with criterion(1, "two-input census has 6 members and equality is not one",
                   budget=1.0):
        census = enumerate_monotone_functions(2)
        assert len(census) == 6
        assert eq_truth_table(1) not in census
        assert main(["verify", "eq-refute"]) == 0
        out = capsys.readouterr().out
        assert "(0,0) <= (0,1) <= (1,1)" in out
        assert "observed=1,0,1" in out


def test_criterion_2_eq_classifier_on_rails(capsys):
    with criterion(2, "rail-encoded equality classifier is correct and "
                      "monotone", budget=1.0):
        c = build_eq_classifier(1)
        # the four valid flattened (x, y) pairs
        for x in "01":
            for y in "01":
                bits = [int(ch) for ch in flatten_bits(x) + flatten_bits(y)]
                assert evaluate(c, bits) == [1 if x == y else 0]
        assert is_structurally_monotone(c)
        # semantic monotonicity over all 16 rail assignments, valid or not
        assert check_semantic_monotone(c) is None


def test_criterion_3_dual_rail_simulation(capsys):
    with criterion(3, "200 random circuits flatten to equivalent NOT-free "
                      "circuits within 2x size", budget=30.0):
        rng = random.Random(20260822)
        for i in range(200):
            b = random_circuit(rng, max_inputs=10, max_gates=60)
            m = dual_rail_transform(b)
            report = exhaustive_equiv(b, m, FLATTENED)
            assert report is None, f"circuit {i}: {report.to_line()}"
            sizes = size_report(b, m)
            assert sizes.not_count_target == 0, f"circuit {i}"
            assert sizes.ratio <= 2.0, f"circuit {i}: ratio {sizes.ratio}"


def _tableau_sweep():
    for name in ("contains_one.tm", "parity.tm"):
        tm = parse_tm(fixture_text(name))
        for n in range(0, 7):
            for t in sorted({n, 2 * n, 2 * n + 4}):
                if t < 1:
                    continue  # a grid needs at least one step
                yield name, tm, n, t


def _acceptance_mask(tm, n, t, full):
    expected = 0
    for i in range(1 << n):
        word = format(i, f"0{n}b") if n else ""
        if run(tm, word, t)[0] == ACCEPT:
            expected |= 1 << i
    return expected & full


def test_criterion_4_tableau_matches_simulator(capsys):
    with criterion(4, "compiled circuits equal the simulator on every input, "
                      "with n NOT gates and one-hot cells", budget=60.0):
        for name, tm, n, t in _tableau_sweep():
            c = compile_tm(tm, n, t)
            assert stats(c).not_count == n, (name, n, t)
            full = full_mask(n)
            vals = evaluate_masks(c, input_masks(n), full)
            assert vals["accepted"] == _acceptance_mask(tm, n, t, full), \
                (name, n, t)
            report = one_hot_report(c, tm, t)
            assert report is None, (name, n, t, report.to_line())


def test_criterion_5_flattened_compilation(capsys):
    with criterion(5, "flattened compilation is NOT-free and agrees on all "
                      "flattened inputs"):
        for name, tm, n, t in _tableau_sweep():
            b = compile_tm(tm, n, t)
            m = compile_tm_flattened(tm, n, t)
            assert is_structurally_monotone(m), (name, n, t)
            report = exhaustive_equiv(b, m, FLATTENED)
            assert report is None, (name, n, t, report.to_line())


class _ListSink:
    def __init__(self):
        self.parts = []

    def write(self, s):
        self.parts.append(s)


def test_criterion_6_log_space_streaming(capsys):
    with criterion(6, "streaming flattener needs only logarithmic state up "
                      "to million-bit inputs", budget=10.0):
        rng = random.Random(6)
        peaks = {}
        for k in range(3, 21):
            n = 1 << k
            bits = format(rng.getrandbits(n), f"0{n}b")
            sink = _ListSink()
            result = stream_flatten(bits, sink)
            peaks[k] = result.peak_state_bits
            assert result.peak_state_bits <= k + 8, k
            assert "".join(sink.parts) == flatten_bits(bits), k
        for k in range(4, 21):
            assert peaks[k] - peaks[k - 1] <= 1, k


def test_criterion_7_polynomial_size(capsys):
    with criterion(7, "machine compilation stays within 160*t^2 gates"):
        tm = parse_tm(fixture_text("contains_one.tm"))
        for t in (4, 8, 16, 32):
            total = stats(compile_tm(tm, 2, t)).total_gates
            assert total <= 160 * t * t, (t, total)
