"""Boolean circuit IR: a named-gate DAG plus a line-oriented netlist format.

Gate kinds are ``input``, ``const``, ``and``, ``or`` and ``not``.  A circuit
is an immutable sequence of gates in definition order together with the
designated output wires; definitions must appear before use, so a well-formed
gate list is already topologically sorted and acyclic.

Netlist grammar (UTF-8, LF line endings, ``#`` starts a comment):

    input  NAME
    const  NAME (0|1)
    and    NAME A B
    or     NAME A B
    not    NAME A
    output NAME

The first NAME after a keyword defines a new gate; ``output`` references an
already-defined one.  Identifiers match ``[A-Za-z_][A-Za-z0-9_]*``.  Tokens
are separated by one or more spaces; emission always uses single spaces, one
definition per line, output lines last.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

INPUT = "input"
CONST = "const"
AND = "and"
OR = "or"
NOT = "not"

_ARITY = {INPUT: 0, CONST: 0, AND: 2, OR: 2, NOT: 1}
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class NetlistError(ValueError):
    """Malformed netlist text or ill-formed circuit structure."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Gate:
    """One gate definition: name, operation, operand wires, const payload."""

    name: str
    op: str
    args: tuple[str, ...] = ()
    value: int | None = None  # const gates only

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True, repr=False)
class Circuit:
    """Immutable gate DAG in definition order plus the output wire list.

    Construction validates the whole structure (unique names, known kinds,
    correct arities, no forward references), so every reachable Circuit is
    well formed.  Evaluation and the analyses below are pure functions; a
    Circuit can be shared freely between threads.
    """

    gates: tuple[Gate, ...]
    outputs: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        index: dict[str, int] = {}
        inputs: list[str] = []
        arg_pos: list[tuple[int, ...]] = []
        for pos, g in enumerate(self.gates):
            if g.op not in _ARITY:
                raise NetlistError(f"unknown gate kind {g.op!r}")
            if not _NAME_RE.match(g.name):
                raise NetlistError(f"invalid gate name {g.name!r}")
            if g.name in index:
                raise NetlistError(f"duplicate gate name {g.name!r}")
            if len(g.args) != _ARITY[g.op]:
                raise NetlistError(
                    f"{g.op} gate {g.name!r} takes {_ARITY[g.op]} operand(s), "
                    f"got {len(g.args)}")
            if g.op == CONST:
                if g.value not in (0, 1):
                    raise NetlistError(f"const gate {g.name!r} must carry 0 or 1")
            elif g.value is not None:
                raise NetlistError(f"{g.op} gate {g.name!r} must not carry a value")
            positions = []
            for a in g.args:
                if a not in index:
                    raise NetlistError(f"undefined reference {a!r} in gate {g.name!r}")
                positions.append(index[a])
            index[g.name] = pos
            arg_pos.append(tuple(positions))
            if g.op == INPUT:
                inputs.append(g.name)
        for o in self.outputs:
            if o not in index:
                raise NetlistError(f"output references undefined gate {o!r}")
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_arg_pos", tuple(arg_pos))
        object.__setattr__(self, "_inputs", tuple(inputs))

    @property
    def inputs(self) -> tuple[str, ...]:
        """Input wire names, in definition order."""
        return self._inputs

    def gate(self, name: str) -> Gate:
        return self.gates[self._index[name]]

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __repr__(self) -> str:
        return (f"Circuit(inputs={len(self._inputs)}, gates={len(self.gates)}, "
                f"outputs={len(self.outputs)})")


def parse_netlist(text: str) -> Circuit:
    """Parse netlist text into a Circuit, enforcing definition-before-use."""
    gates: list[Gate] = []
    outputs: list[str] = []
    defined: set[str] = set()
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword = tokens[0]
        if keyword == "output":
            if len(tokens) != 2:
                raise NetlistError("output takes exactly one name", lineno)
            if tokens[1] not in defined:
                raise NetlistError(f"undefined reference {tokens[1]!r}", lineno)
            outputs.append(tokens[1])
            continue
        if keyword not in _ARITY:
            raise NetlistError(f"unknown keyword {keyword!r}", lineno)
        expected = 2 + _ARITY[keyword] + (1 if keyword == CONST else 0)
        if len(tokens) != expected:
            raise NetlistError(
                f"{keyword} line takes {expected - 1} token(s) after the keyword, "
                f"got {len(tokens) - 1}", lineno)
        name = tokens[1]
        if not _NAME_RE.match(name):
            raise NetlistError(f"invalid name {name!r}", lineno)
        if name in defined:
            raise NetlistError(f"duplicate name {name!r}", lineno)
        value = None
        args: tuple[str, ...] = ()
        if keyword == CONST:
            if tokens[2] not in ("0", "1"):
                raise NetlistError(f"const value must be 0 or 1, got {tokens[2]!r}", lineno)
            value = int(tokens[2])
        else:
            args = tuple(tokens[2:])
            for a in args:
                if a not in defined:
                    raise NetlistError(f"undefined reference {a!r}", lineno)
        gates.append(Gate(name, keyword, args, value))
        defined.add(name)
    return Circuit(tuple(gates), tuple(outputs))


def emit_netlist(c: Circuit) -> str:
    """Render the canonical netlist text; parse(emit(c)) reproduces c."""
    lines = []
    for g in c.gates:
        if g.op == CONST:
            lines.append(f"const {g.name} {g.value}")
        elif g.op == INPUT:
            lines.append(f"input {g.name}")
        else:
            lines.append(f"{g.op} {g.name} " + " ".join(g.args))
    for o in c.outputs:
        lines.append(f"output {o}")
    return "\n".join(lines) + "\n" if lines else ""


def _gate_values(c: Circuit, assignment) -> list[int]:
    if len(assignment) != len(c.inputs):
        raise ValueError(
            f"assignment has {len(assignment)} bits, circuit has "
            f"{len(c.inputs)} inputs")
    vals = [0] * len(c.gates)
    arg_pos = c._arg_pos
    next_input = 0
    for pos, g in enumerate(c.gates):
        op = g.op
        if op == AND:
            a, b = arg_pos[pos]
            vals[pos] = vals[a] & vals[b]
        elif op == OR:
            a, b = arg_pos[pos]
            vals[pos] = vals[a] | vals[b]
        elif op == NOT:
            vals[pos] = 1 - vals[arg_pos[pos][0]]
        elif op == INPUT:
            bit = assignment[next_input]
            next_input += 1
            if bit not in (0, 1):
                raise ValueError(f"assignment value {bit!r} is not a bit")
            vals[pos] = int(bit)
        else:
            vals[pos] = g.value
    return vals


def evaluate(c: Circuit, assignment) -> list[int]:
    """Evaluate the circuit on one assignment; returns output bits in order.

    ``assignment`` feeds the inputs positionally, in definition order.
    """
    vals = _gate_values(c, assignment)
    idx = c._index
    return [vals[idx[o]] for o in c.outputs]


def wire_values(c: Circuit, assignment) -> dict[str, int]:
    """Evaluate and return the value of every named wire."""
    vals = _gate_values(c, assignment)
    return {g.name: vals[pos] for pos, g in enumerate(c.gates)}


def is_structurally_monotone(c: Circuit) -> bool:
    """True when the circuit contains no NOT gate (and/or/input/const only)."""
    return all(g.op != NOT for g in c.gates)


@dataclass(frozen=True)
class CircuitStats:
    input_count: int
    const_count: int
    and_count: int
    or_count: int
    not_count: int
    output_count: int
    depth: int
    total_gates: int


def stats(c: Circuit) -> CircuitStats:
    """Gate counts per kind plus the longest source-to-output path length."""
    counts = {INPUT: 0, CONST: 0, AND: 0, OR: 0, NOT: 0}
    depth = [0] * len(c.gates)
    arg_pos = c._arg_pos
    for pos, g in enumerate(c.gates):
        counts[g.op] += 1
        if arg_pos[pos]:
            depth[pos] = 1 + max(depth[a] for a in arg_pos[pos])
    idx = c._index
    circuit_depth = max((depth[idx[o]] for o in c.outputs), default=0)
    return CircuitStats(
        input_count=counts[INPUT],
        const_count=counts[CONST],
        and_count=counts[AND],
        or_count=counts[OR],
        not_count=counts[NOT],
        output_count=len(c.outputs),
        depth=circuit_depth,
        total_gates=len(c.gates),
    )


_DOT_SHAPE = {INPUT: "ellipse", CONST: "diamond", AND: "box", OR: "box", NOT: "box"}


def emit_dot(c: Circuit) -> str:
    """Graphviz rendering: one node per gate, one edge per operand use.

    Nodes and edges are emitted in gate definition order, so the output is
    byte-stable for a given circuit.  Output gates get a double border.
    """
    out = ["digraph circuit {", "  rankdir=LR;"]
    marked = set(c.outputs)
    for g in c.gates:
        if g.op == INPUT:
            label = g.name
        elif g.op == CONST:
            label = f"{g.name}={g.value}"
        else:
            label = f"{g.op}\\n{g.name}"
        attrs = f'shape={_DOT_SHAPE[g.op]}, label="{label}"'
        if g.name in marked:
            attrs += ", peripheries=2"
        out.append(f'  "{g.name}" [{attrs}];')
    for g in c.gates:
        for a in g.args:
            out.append(f'  "{a}" -> "{g.name}";')
    out.append("}")
    return "\n".join(out) + "\n"
