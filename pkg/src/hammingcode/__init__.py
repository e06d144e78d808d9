"""Hamming's interleaved single-error-correcting block codes for any valid (n, k)."""

from .channel import (
    BSC,
    AnalysisReport,
    ChannelConfig,
    FlipPosition,
    SplitMix64,
    analyze,
    block_error_rate_sim,
    exhaustive_correction_check,
    inject,
    min_distance_bruteforce,
    weight_distribution,
)
from .codec import (
    CheckingNumber,
    DecodeOutcome,
    Status,
    checking_numbers,
    compute_checking_number,
    decode,
    decode_many,
    encode,
    encode_many,
    extract_data,
)
from .errors import (
    FormatError,
    HammingError,
    InvalidInputError,
    InvalidParameterError,
    PositionRangeError,
    ResourceLimitError,
)
from .matrices import (
    BinaryMatrix,
    ColumnPermutation,
    find_column_permutation,
    generator_matrix,
    parity_check_interleaved,
    parity_check_systematic,
)
from .params import (
    BitBlock,
    Check,
    CodeParams,
    Data,
    check_mask,
    classify_position,
    derive_params,
    overall_parity,
)
from .stream import FrameHeader, StreamReport, decode_stream, encode_stream
from .trace import render_trace

__version__ = "0.1.0"
