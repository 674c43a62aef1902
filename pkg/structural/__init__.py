"""
Structural recognizers and certificate construction
"""
from .certificate import BlockLabel, Certificate, Verdict, Witness
from .biconnected import (
    classify_block,
    orient_chordal_with_sink,
    orient_sink_free,
    recognize_biconnected,
    recognize_biconnected_rooted,
)
from .recognize import (
    RecognitionMode,
    build_orientation,
    certify_2sat,
    check_mode,
    recognize,
    recognize_block_cactus,
)
from .sequence import BuildSequence, Step, StepKind, apply_steps, build_sequence
from .witness import hole_model, search_witness

__all__ = [
    'BlockLabel', 'Certificate', 'Verdict', 'Witness',
    'classify_block', 'orient_chordal_with_sink', 'orient_sink_free',
    'recognize_biconnected', 'recognize_biconnected_rooted',
    'RecognitionMode', 'build_orientation', 'certify_2sat', 'check_mode',
    'recognize', 'recognize_block_cactus',
    'BuildSequence', 'Step', 'StepKind', 'apply_steps', 'build_sequence',
    'hole_model', 'search_witness',
]
