#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace phopf {

/// Exact element of the cyclotomic field Q(zeta_n), stored in the power
/// basis 1, z, ..., z^{phi(n)-1} of Q[x]/Phi_n(x) with rational
/// coefficients. Values are immutable; all operations return new values.
///
/// Binary operations require equal conductors, except that a value whose
/// conductor divides the other operand's is embedded automatically (this
/// embedding is lossless). Anything else throws conductor_mismatch.
class CycNum {
public:
    /// Zero at conductor 1.
    CycNum();
    /// Integer constant at conductor 1.
    CycNum(long value);

    static CycNum rational(const mpq_class& v, long conductor = 1);
    static CycNum integer(long v, long conductor = 1);
    /// zeta_n^k, a primitive (n/gcd(n,k))-th root of unity.
    static CycNum zeta(long n, long k = 1);
    static CycNum zero(long conductor = 1);
    static CycNum one(long conductor = 1);

    long conductor() const { return n_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the value lies in Q (all non-constant coordinates vanish).
    bool is_rational() const;
    /// The constant coordinate; only meaningful together with is_rational().
    const mpq_class& rational_part() const { return c_[0]; }

    CycNum operator-() const;
    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator/(const CycNum& o) const;
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
    CycNum& operator/=(const CycNum& o) { return *this = *this / o; }

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    CycNum inverse() const;
    /// Integer power; negative exponents invert.
    CycNum pow(long e) const;

    /// Lossless embedding into Q(zeta_m) for any multiple m of the conductor.
    CycNum embedded(long m) const;
    /// Attempt to rewrite over Q(zeta_m) for a divisor m of the conductor;
    /// empty when the value does not lie in the subfield.
    std::optional<CycNum> lowered(long m) const;
    /// Smallest k with value^k == 1, when the value is a root of unity.
    std::optional<long> root_of_unity_order() const;

    /// Rendering like "1 - 2/3*z^2 (zeta 5)".
    std::string str() const;
    /// Numerical embedding z -> exp(2*pi*i/n), for report printing only.
    std::complex<double> approx() const;

private:
    CycNum(long n, std::vector<mpq_class> c);

    long n_;
    std::vector<mpq_class> c_;

    friend struct CycloOps;
};

struct conductor_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// q-integer (n)_q = 1 + q + ... + q^{n-1}; (0)_q = 0. Rejects q = 0.
CycNum qint(long n, const CycNum& q);

/// q-factorial (n)_q! = (1)_q (2)_q ... (n)_q, with (0)_q! = 1.
CycNum qfactorial(long n, const CycNum& q);

/// Gaussian binomial {n choose k}_q computed by the Pascal recursion
///   {n+1 choose k}_q = {n choose k}_q + {n choose k-1}_q q^{n-k+1},
/// which stays defined at roots of unity.
CycNum qbinom(long n, long k, const CycNum& q);

/// The factorial-quotient route (n)_q! / ((k)_q! (n-k)_q!); throws
/// division_by_zero when a denominator vanishes. Kept as a cross-check
/// against the Pascal route where both are defined.
CycNum qbinom_factorial(long n, long k, const CycNum& q);

long euler_phi(long n);

}  // namespace phopf
