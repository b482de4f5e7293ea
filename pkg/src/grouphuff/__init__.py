"""Classic and grouped Huffman coding over bytes."""
from .analysis import (
    ComparisonReport,
    ValidityReport,
    compression_report,
    header_overhead,
    kraft_sum,
    prefix_violations,
)
from .codec import (
    Container,
    compress,
    decode_payload,
    decompress,
    deserialize_header,
    encode_payload,
    serialize_header,
)
from .errors import *  # noqa: F401,F403
from .freq import FrequencyTable, build_frequency_table
from .grouping import (
    GroupedPlan,
    SymbolGroup,
    expand_literal,
    expand_prefix_free,
    form_groups,
    grouped_codebook,
)
from .huffman import (
    CLASSIC,
    GROUPED_LITERAL,
    GROUPED_PREFIX_FREE,
    Codebook,
    assign_canonical_codes,
    build_code_lengths,
    classic_codebook,
    weighted_code_cost,
)

__version__ = "0.1.0"
