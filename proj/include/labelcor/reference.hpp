#pragma once

// Serial, loop-for-loop transcriptions of the estimators. Slow and kept only as
// independent checks for the parallel kernels (tests and bench_kernels).

#include "labelcor/dataset.hpp"
#include "labelcor/pcor_multivariate.hpp"

namespace labelcor::reference {

/// Ordered triple loop over angle_kernel, straight from the V-statistic sums.
PcorComponents pcor_multivariate(const Dataset& d, double tie_tolerance = 0.0);

double gini_cor(const Dataset& d);
double gini_kernel_cor(const Dataset& d, double sigma2 = 1.0);

}  // namespace labelcor::reference
