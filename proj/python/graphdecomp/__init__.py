"""Vertex decomposition calculus for directed and undirected graphs.

Thin wrapper over the C++ extension: inflation fixpoints and hulls, regions
and the unique interval decomposition, jets, matching decompositions, and
the bowtie forbidden-subgraph bound with its exhaustive oracle.
"""

try:
    from ._graphdecomp import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _graphdecomp import *  # noqa: F401,F403

__version__ = "0.1.0"
