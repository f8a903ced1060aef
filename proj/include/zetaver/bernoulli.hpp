#ifndef ZETAVER_BERNOULLI_HPP
#define ZETAVER_BERNOULLI_HPP

#include <vector>

#include "zetaver/rational.hpp"

namespace zv {

// Exact B_k with B_1 = -1/2, matching zeta(1-k) = -B_k/k.
rat bernoulli(unsigned long k);

// Bernoulli polynomial B_k(x), exact.
rat bernoulli_poly(unsigned long k, const rat& x);

} // namespace zv

#endif
