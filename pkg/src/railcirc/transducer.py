"""Single-pass streaming bit flattener with working-memory accounting.

The transducer reads the input once, front to back, and emits the two-bit
encoding of each bit (0 -> 10, 1 -> 01) before the next read.  Its working
state is a position counter plus a fixed finite control, so the instrumented
peak never exceeds ceil(log2(bits_read + 1)) + CONTROL_STATE_BITS, i.e. the
memory footprint is logarithmic in the input length.
"""

from __future__ import annotations

from dataclasses import dataclass

# Width of the fixed control component of the streaming loop (phase plus
# halt flag); everything else the transducer remembers is the position
# counter, whose width is what grows with the input.
CONTROL_STATE_BITS = 2


@dataclass(frozen=True)
class TransducerStats:
    input_bits_read: int
    output_bits_written: int
    peak_state_bits: int


def stream_flatten(source, sink) -> TransducerStats:
    """Flatten a bit stream into ``sink`` in one forward pass.

    ``source`` yields bits as '0'/'1' characters (ints 0/1 also accepted);
    ``sink`` is file-like (a ``write`` method taking str).  Both encoded
    output bits of a read are written before the next read happens.
    """
    write = sink.write
    reads = 0
    peak = CONTROL_STATE_BITS
    for bit in source:
        if bit == "0" or bit == 0:
            write("10")
        elif bit == "1" or bit == 1:
            write("01")
        else:
            raise ValueError(f"non-bit symbol {bit!r} in source")
        reads += 1
        width = reads.bit_length() + CONTROL_STATE_BITS
        if width > peak:
            peak = width
    return TransducerStats(reads, 2 * reads, peak)
