"""Shared test machinery: fixture loading, random circuits, grid checks."""

from __future__ import annotations

from pathlib import Path

from railcirc import (AND, INPUT, NOT, ONE_HOT, OR, CellAlphabet, Circuit,
                      CounterexampleReport, Gate)
from railcirc.bitsim import (assignment_of_index, evaluate_masks, full_mask,
                             input_masks, lowest_set_bit)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


def random_circuit(rng, max_inputs=10, max_gates=60, ops=(AND, OR, NOT)) -> Circuit:
    """A random single-output circuit with at most max_gates gates total.

    NOT gates may land at any depth.  Operands are drawn uniformly from all
    earlier wires, so deep and reconvergent shapes both occur.
    """
    n = rng.randint(1, max_inputs)
    gates = [Gate(f"x{i}", INPUT) for i in range(n)]
    wires = [g.name for g in gates]
    for j in range(rng.randint(1, max_gates - n)):
        op = rng.choice(ops)
        name = f"g{j}"
        if op == NOT:
            args = (rng.choice(wires),)
        else:
            args = (rng.choice(wires), rng.choice(wires))
        gates.append(Gate(name, op, args))
        wires.append(name)
    return Circuit(tuple(gates), (wires[-1],))


def random_monotone_circuit(rng, max_inputs=10, max_gates=60) -> Circuit:
    return random_circuit(rng, max_inputs, max_gates, ops=(AND, OR))


def one_hot_report(circuit, tm, t, masks=None, full=None):
    """Check every grid cell decodes to exactly one symbol on every assignment.

    Sweeps all Boolean inputs by default; pass masks/full to restrict the
    domain (e.g. the valid rail assignments of a flattened compile).  Returns
    None when the invariant holds everywhere, else a ONE_HOT counterexample
    naming the offending cell.
    """
    if masks is None:
        n = len(circuit.inputs)
        masks = input_masks(n)
        full = full_mask(n)
    vals = evaluate_masks(circuit, masks, full)
    ab = CellAlphabet.from_machine(tm)
    width = full.bit_length().bit_length() - 1  # domain has 2**width assignments
    for r in range(t + 1):
        for c in range(t + 1):
            seen = doubled = 0
            for k in range(len(ab)):
                w = vals[f"c_{r}_{c}_{k}"]
                doubled |= seen & w
                seen |= w
            bad = (full ^ seen) | doubled
            if bad:
                i = lowest_set_bit(bad)
                hot = sum((vals[f"c_{r}_{c}_{k}"] >> i) & 1
                          for k in range(len(ab)))
                return CounterexampleReport(
                    kind=ONE_HOT,
                    witness=(assignment_of_index(i, width),),
                    expected=(1,),
                    observed=(hot,),
                    detail=f"cell ({r},{c})",
                )
    return None


class OneShotSource:
    """Forward-only bit source that counts reads and forbids a second pass."""

    def __init__(self, bits: str):
        self._iter = iter(bits)
        self.reads = 0
        self.exhausted = False

    def __iter__(self):
        if self.exhausted:
            raise AssertionError("source iterated twice")
        self.exhausted = True
        for ch in self._iter:
            self.reads += 1
            yield ch
