"""Numerical machinery for the critical-line second moment: fast/oracle
Z-evaluation, a checkpointed Hardy-Littlewood integral, the ladder transform
and its reverse iterates, segment chains with their measure/gap laws, and a
weighted-orthogonality verifier."""

__version__ = "0.1.0"
