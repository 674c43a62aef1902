"""
Generators, enumeration, serialization, crosscheck harness and CLI
"""
from structural.sequence import apply_steps

from .corpus import enumerate_connected, connected_up_to
from .crosscheck import SUITES, CrosscheckReport, Disagreement, crosscheck
from .generators import KINDS, GeneratorSpec, generate
from .rng import SplitMix64
from .serialize import TextFormat, parse, serialize
from .storage import CorpusCache, ReportStore

__all__ = [
    'apply_steps',
    'enumerate_connected', 'connected_up_to',
    'SUITES', 'CrosscheckReport', 'Disagreement', 'crosscheck',
    'KINDS', 'GeneratorSpec', 'generate',
    'SplitMix64',
    'TextFormat', 'parse', 'serialize',
    'CorpusCache', 'ReportStore',
]
