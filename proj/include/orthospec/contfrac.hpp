#pragma once

#include <mutex>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "orthospec/quadnum.hpp"

namespace orthospec {

// Purely periodic continued fraction [a_0, a_1, ..., a_{l-1}] with all
// partial quotients >= 1, repeated forever. Convergents p_n/q_n follow
// p_n = a_n p_{n-1} + p_{n-2} with (p_{-2}, p_{-1}) = (0, 1) and
// (q_{-2}, q_{-1}) = (1, 0), the quotient index taken mod l.
class PeriodicCF {
  public:
    explicit PeriodicCF(std::vector<long> quotients);
    PeriodicCF(const PeriodicCF& other);
    PeriodicCF& operator=(const PeriodicCF& other);

    const std::vector<long>& quotients() const { return quotients_; }
    long period() const { return static_cast<long>(quotients_.size()); }

    // The quotient list doubled once when the period is odd, so that the
    // holonomy matrix has determinant +1; unchanged for even periods.
    std::vector<long> even_quotients() const;
    long even_period() const;

    // a_n for n >= 0 (index mod period).
    long quotient(long n) const;

    // (p_n, q_n) for n >= -2, cached across calls.
    std::pair<mpz_class, mpz_class> convergent(long n) const;

  private:
    std::vector<long> quotients_;
    mutable std::mutex mutex_;
    mutable std::vector<std::pair<mpz_class, mpz_class>> cache_;  // cache_[i] = convergent i-2
};

// The exact value alpha > 1 of the periodic continued fraction: the
// attracting fixed point of x -> [a_0, ..., a_{l-1}, x], i.e. the positive
// root of q_{l-1} x^2 + (q_{l-2} - p_{l-1}) x - p_{l-2}. Its Galois
// conjugate lies in (-1, 0).
QuadNum value(const PeriodicCF& cf);

// [a_k, a_{k+1}, ..., a_{k+l-1}]: the quotient list rotated left by k
// (taken mod period).
PeriodicCF cyclic_permutation(const PeriodicCF& cf, long k);

// d_k(n) = p_k q_n - p_n q_k, computed by the recurrence
// d_k(k) = 0, d_k(k+1) = (-1)^(k-1), d_k(n) = a_n d_k(n-1) + d_k(n-2)
// for n >= k >= -1.
mpz_class det_rec(const PeriodicCF& cf, long k, long n);

// Cross ratio [r_{n+2}, r_n, r_{m+2}, r_m] of four convergents, evaluated
// through the determinant recurrence as
// (-1)^(m+n) a_{n+2} a_{m+2} / (d_m(n) d_{m+2}(n+2)) for n, m >= -1, n != m.
// The result is asserted to land in (0, 1].
QuadNum convergent_cross_ratio(const PeriodicCF& cf, long n, long m);

// Numerator of the s-th convergent of the cyclic permutation by k (mod the
// period), for s >= -2.
mpz_class permuted_numerator(const PeriodicCF& cf, long k, long s);

}  // namespace orthospec
