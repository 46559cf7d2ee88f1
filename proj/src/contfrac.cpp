#include "orthospec/contfrac.hpp"

#include <stdexcept>

namespace orthospec {

PeriodicCF::PeriodicCF(std::vector<long> quotients) : quotients_(std::move(quotients)) {
    if (quotients_.empty()) throw std::invalid_argument("periodic continued fraction needs at least one quotient");
    for (long a : quotients_)
        if (a < 1) throw std::invalid_argument("partial quotients must be positive");
    cache_.emplace_back(mpz_class(0), mpz_class(1));  // n = -2
    cache_.emplace_back(mpz_class(1), mpz_class(0));  // n = -1
}

PeriodicCF::PeriodicCF(const PeriodicCF& other) {
    std::scoped_lock lock(other.mutex_);
    quotients_ = other.quotients_;
    cache_ = other.cache_;
}

PeriodicCF& PeriodicCF::operator=(const PeriodicCF& other) {
    if (this != &other) {
        std::scoped_lock lock(mutex_, other.mutex_);
        quotients_ = other.quotients_;
        cache_ = other.cache_;
    }
    return *this;
}

std::vector<long> PeriodicCF::even_quotients() const {
    std::vector<long> result = quotients_;
    if (period() % 2 != 0) result.insert(result.end(), quotients_.begin(), quotients_.end());
    return result;
}

long PeriodicCF::even_period() const { return period() % 2 == 0 ? period() : 2 * period(); }

long PeriodicCF::quotient(long n) const {
    if (n < 0) throw std::invalid_argument("quotient index must be nonnegative");
    return quotients_[static_cast<size_t>(n % period())];
}

std::pair<mpz_class, mpz_class> PeriodicCF::convergent(long n) const {
    if (n < -2) throw std::invalid_argument("convergent index must be at least -2");
    std::scoped_lock lock(mutex_);
    while (static_cast<long>(cache_.size()) <= n + 2) {
        const long next = static_cast<long>(cache_.size()) - 2;
        const mpz_class a = quotient(next);
        const auto& prev1 = cache_[cache_.size() - 1];
        const auto& prev2 = cache_[cache_.size() - 2];
        cache_.emplace_back(a * prev1.first + prev2.first, a * prev1.second + prev2.second);
    }
    return cache_[static_cast<size_t>(n + 2)];
}

QuadNum value(const PeriodicCF& cf) {
    const long l = cf.period();
    auto [p1, q1] = cf.convergent(l - 1);
    auto [p2, q2] = cf.convergent(l - 2);
    // Positive root of q_{l-1} x^2 + (q_{l-2} - p_{l-1}) x - p_{l-2}; the
    // discriminant equals trace^2 - 4 det of the holonomy matrix.
    mpz_class lin = p1 - q2;
    mpz_class disc = lin * lin + 4 * q1 * p2;
    return QuadNum(lin, mpz_class(1), 2 * q1, disc);
}

PeriodicCF cyclic_permutation(const PeriodicCF& cf, long k) {
    const long l = cf.period();
    const long shift = ((k % l) + l) % l;
    std::vector<long> rotated;
    rotated.reserve(static_cast<size_t>(l));
    for (long i = 0; i < l; ++i) rotated.push_back(cf.quotients()[static_cast<size_t>((i + shift) % l)]);
    return PeriodicCF(std::move(rotated));
}

mpz_class det_rec(const PeriodicCF& cf, long k, long n) {
    if (k < -1) throw std::invalid_argument("det_rec needs k >= -1");
    if (n < k) throw std::invalid_argument("det_rec needs n >= k");
    if (n == k) return 0;
    mpz_class prev2 = 0;                                  // d_k(k)
    mpz_class prev1 = (((k % 2) + 2) % 2 == 1) ? 1 : -1;  // d_k(k+1) = (-1)^(k-1)
    if (n == k + 1) return prev1;
    mpz_class current;
    for (long i = k + 2; i <= n; ++i) {
        current = cf.quotient(i) * prev1 + prev2;
        prev2 = prev1;
        prev1 = current;
    }
    return current;
}

namespace {

// d_k(n) extended to either argument order via antisymmetry.
mpz_class det_signed(const PeriodicCF& cf, long k, long n) {
    return n >= k ? det_rec(cf, k, n) : mpz_class(-det_rec(cf, n, k));
}

}  // namespace

QuadNum convergent_cross_ratio(const PeriodicCF& cf, long n, long m) {
    if (n < -1 || m < -1) throw std::invalid_argument("convergent cross ratio needs indices >= -1");
    if (n == m) throw std::invalid_argument("convergent cross ratio needs distinct indices");
    mpz_class numerator = mpz_class(cf.quotient(n + 2)) * cf.quotient(m + 2);
    if ((((n + m) % 2) + 2) % 2 == 1) numerator = -numerator;
    mpz_class denominator = det_signed(cf, m, n) * det_signed(cf, m + 2, n + 2);
    // Positive in (0,1] when m and n share a parity (disjoint geodesics on one
    // side of alpha); negative when the parities differ.
    return QuadNum(mpq_class(numerator, denominator));
}

mpz_class permuted_numerator(const PeriodicCF& cf, long k, long s) {
    return cyclic_permutation(cf, k).convergent(s).first;
}

}  // namespace orthospec
