from .arith import (
    bernoulli,
    divisor_count,
    divisor_count_table,
    divisors,
    sigma,
    sigma_table,
)
from .convolution import (
    ConvolutionRegistry,
    ConvolutionStrategy,
    PackedConvolution,
    SchoolbookConvolution,
    convolve,
    set_default_strategy,
)
from .io import (
    format_coefficient,
    read_coefficient_vector,
    read_series_csv,
    series_to_frame,
    write_series_csv,
)
from .products import (
    distinct_odd_parts_product,
    distinct_parts_product,
    euler_product,
)
from .qseries import (
    QSeries,
    qs_add,
    qs_apply_Vd,
    qs_invert,
    qs_mul,
    qs_pow,
    qs_sum,
    qs_theta,
)

__all__ = [
    "QSeries",
    "qs_add",
    "qs_apply_Vd",
    "qs_invert",
    "qs_mul",
    "qs_pow",
    "qs_sum",
    "qs_theta",
    "ConvolutionRegistry",
    "ConvolutionStrategy",
    "PackedConvolution",
    "SchoolbookConvolution",
    "convolve",
    "set_default_strategy",
    "bernoulli",
    "divisor_count",
    "divisor_count_table",
    "divisors",
    "sigma",
    "sigma_table",
    "distinct_odd_parts_product",
    "distinct_parts_product",
    "euler_product",
    "format_coefficient",
    "read_coefficient_vector",
    "read_series_csv",
    "series_to_frame",
    "write_series_csv",
]
