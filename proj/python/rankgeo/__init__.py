"""Rank-metric codes via q-systems: generalized rank weights, structural
verifiers, wiretap leakage, linear sets and constant-weight classification.

Field elements cross the boundary as serialized integers: -1 is zero,
otherwise the exponent of the fixed generator.
"""

from rankgeo._core import *  # noqa: F401,F403
