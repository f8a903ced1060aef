#include "zetaver/bernoulli.hpp"

#include <mutex>

namespace zv {

namespace {
std::vector<rat> cache_ = {rat(1), make_rat(-1, 2)};
std::mutex cache_lock_;
}

// sum_{j=0}^{k} C(k+1,j) B_j = 0, solved for B_k.
rat bernoulli(unsigned long k) {
    std::lock_guard<std::mutex> g(cache_lock_);
    while (cache_.size() <= k) {
        unsigned long m = cache_.size();
        rat acc(0);
        for (unsigned long j = 0; j < m; ++j)
            acc += rat(binomial(m + 1, j)) * cache_[j];
        acc /= rat(m + 1);
        cache_.push_back(-acc);
    }
    return cache_[k];
}

rat bernoulli_poly(unsigned long k, const rat& x) {
    rat acc(0);
    for (unsigned long j = 0; j <= k; ++j)
        acc += rat(binomial(k, j)) * bernoulli(j) * pow_q(x, static_cast<long>(k - j));
    return acc;
}

} // namespace zv
