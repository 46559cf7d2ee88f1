#pragma once

#include <gmpxx.h>

#include <mutex>
#include <vector>

#include "orthospec/bigreal.hpp"
#include "orthospec/quadnum.hpp"

namespace orthospec {

// f_0 = 0, f_1 = f_2 = 1, extended to negative indices by running the
// recurrence backwards: f_{-n} = (-1)^{n+1} f_n.
mpz_class fibonacci(long n);

// l_0 = 2, l_1 = 1; backwards extension gives l_{-n} = (-1)^n l_n.
mpz_class lucas(long n);

// The two-term linear recurrence x_n = coeff1 * x_{n-1} + coeff0 * x_{n-2}
// with x_0 = seed0, x_1 = seed1, over exact scalars. Terms are memoized in
// both directions; negative indices require coeff0 != 0 (the recurrence is
// inverted as x_{n-2} = (x_n - coeff1 * x_{n-1}) / coeff0).
//
// term() is safe to call concurrently; cache growth is serialized.
class Recurrence2 {
  public:
    Recurrence2(QuadNum coeff1, QuadNum coeff0, QuadNum seed0, QuadNum seed1);
    Recurrence2(const Recurrence2& other);
    Recurrence2& operator=(const Recurrence2& other);

    const QuadNum& coeff1() const { return coeff1_; }
    const QuadNum& coeff0() const { return coeff0_; }

    QuadNum term(long n) const;

  private:
    QuadNum coeff1_, coeff0_;
    mutable std::mutex mutex_;
    mutable std::vector<QuadNum> forward_;   // forward_[n] = x_n
    mutable std::vector<QuadNum> backward_;  // backward_[k] = x_{-k-1}
};

// U_0 = 1, U_1 = 2x, U_n = 2x U_{n-1} - U_{n-2}, evaluated numerically at
// the precision of x.
BigReal chebyshev_U(long n, const BigReal& x);

}  // namespace orthospec
