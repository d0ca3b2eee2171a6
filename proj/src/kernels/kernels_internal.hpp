#pragma once

#include "betapack/kernels.hpp"

namespace betapack::simd::detail {

const KernelSet& scalar_table();
#if defined(BETAPACK_HAVE_AVX2)
const KernelSet& avx2_table();
#endif

}  // namespace betapack::simd::detail
