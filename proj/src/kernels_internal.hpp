#pragma once

#include "svineq/kernels.hpp"

namespace svineq::kernels::detail {

#if defined(SVINEQ_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

}  // namespace svineq::kernels::detail
