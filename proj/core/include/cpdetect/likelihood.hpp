#pragma once

#include <stdexcept>

#include "cpdetect/berk_jones.hpp"
#include "cpdetect/contrast.hpp"
#include "cpdetect/generators.hpp"

namespace cpdetect {

// Internal numeric failure distinct from bad input; the CLI maps it to its
// own exit code.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// log of the mixture likelihood ratio
//   (1/|T'|) sum_k prod_j [1 + eps (exp(rho Y_{jk} - rho^2/2) - 1)],
// evaluated through the contrasts only, in log space throughout.
// Throws numeric_error if the result is not representable.
double log_likelihood_ratio(const ObservationMatrix& x, const SparseMixture& prior);

// Oracle likelihood-ratio test: reject iff log LR > 0.
TestDecision lrt_test(const ObservationMatrix& x, const SparseMixture& prior);

} // namespace cpdetect
