"""Two-sided Groebner bases in free associative algebras."""

try:
    from . import _freegb as _impl  # installed layout
except ImportError:
    import _freegb as _impl  # build-tree layout

InconsistentIdeal = _impl.InconsistentIdeal
ParseError = _impl.ParseError
labels = _impl.labels
example_input = _impl.example_input
parse = _impl.parse
run = _impl.run
run_example = _impl.run_example

__all__ = [
    "InconsistentIdeal",
    "ParseError",
    "labels",
    "example_input",
    "parse",
    "run",
    "run_example",
]
