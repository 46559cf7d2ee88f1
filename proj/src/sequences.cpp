#include "orthospec/sequences.hpp"

#include <stdexcept>
#include <utility>

namespace orthospec {

mpz_class fibonacci(long n) {
    mpz_class f;
    unsigned long magnitude = n >= 0 ? static_cast<unsigned long>(n)
                                     : static_cast<unsigned long>(-n);
    mpz_fib_ui(f.get_mpz_t(), magnitude);
    if (n < 0 && magnitude % 2 == 0) f = -f;
    return f;
}

mpz_class lucas(long n) {
    mpz_class l;
    unsigned long magnitude = n >= 0 ? static_cast<unsigned long>(n)
                                     : static_cast<unsigned long>(-n);
    mpz_lucnum_ui(l.get_mpz_t(), magnitude);
    if (n < 0 && magnitude % 2 == 1) l = -l;
    return l;
}

Recurrence2::Recurrence2(QuadNum coeff1, QuadNum coeff0, QuadNum seed0, QuadNum seed1)
    : coeff1_(std::move(coeff1)), coeff0_(std::move(coeff0)) {
    forward_.push_back(std::move(seed0));
    forward_.push_back(std::move(seed1));
}

Recurrence2::Recurrence2(const Recurrence2& other) : coeff1_(other.coeff1_), coeff0_(other.coeff0_) {
    std::lock_guard<std::mutex> lock(other.mutex_);
    forward_ = other.forward_;
    backward_ = other.backward_;
}

Recurrence2& Recurrence2::operator=(const Recurrence2& other) {
    if (this != &other) {
        std::scoped_lock lock(mutex_, other.mutex_);
        coeff1_ = other.coeff1_;
        coeff0_ = other.coeff0_;
        forward_ = other.forward_;
        backward_ = other.backward_;
    }
    return *this;
}

QuadNum Recurrence2::term(long n) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (n >= 0) {
        while (forward_.size() <= static_cast<size_t>(n)) {
            size_t k = forward_.size();
            forward_.push_back(coeff1_ * forward_[k - 1] + coeff0_ * forward_[k - 2]);
        }
        return forward_[static_cast<size_t>(n)];
    }
    if (coeff0_.is_zero()) {
        throw std::domain_error("Recurrence2: negative index requires coeff0 != 0");
    }
    size_t need = static_cast<size_t>(-n);
    while (backward_.size() < need) {
        // backward_[k] = x_{-k-1} = (x_{-k+1} - coeff1 * x_{-k}) / coeff0
        size_t k = backward_.size();
        const QuadNum& ahead2 = k >= 2 ? backward_[k - 2] : forward_[1 - k];
        const QuadNum& ahead1 = k >= 1 ? backward_[k - 1] : forward_[0];
        backward_.push_back((ahead2 - coeff1_ * ahead1) / coeff0_);
    }
    return backward_[need - 1];
}

BigReal chebyshev_U(long n, const BigReal& x) {
    if (n < 0) throw std::domain_error("chebyshev_U requires n >= 0");
    const long prec = x.precision();
    BigReal two_x = mul_2exp(x, 1);
    BigReal prev = BigReal::of_int(1, prec);  // U_0
    if (n == 0) return prev;
    BigReal current = two_x;  // U_1
    for (long k = 2; k <= n; ++k) {
        BigReal next = two_x * current - prev;
        prev = current;
        current = next;
    }
    return current;
}

}  // namespace orthospec
