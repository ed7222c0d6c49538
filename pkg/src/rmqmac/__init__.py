"""Reed-Muller codes on Pauli channels viewed as two-user Q-MACs."""

from .channel import (
    PauliChannel,
    Target,
    binary_entropy,
    brute_force_mi,
    entropy4,
    hashing_bound,
    induced_channels,
    make_channel,
    mi_single,
    mi_sum,
    sample_noise,
    transmit,
)
from .decoders import joint_ml_decode, monte_carlo, successive_decode
from .gf2 import BitMatrix, BitVector
from .region import RatePair, joint_achievable, successive_decodable, sweep_grid
from .rm import RmCode, build_rm, make_css_pair, rm_dimension

__version__ = "0.1.0"
