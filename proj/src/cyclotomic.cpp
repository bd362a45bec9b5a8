#include "phopf/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace phopf {

namespace {

// Dense polynomial over Q, lowest degree first.
using Poly = std::vector<mpq_class>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Euclidean division; q and r such that a = q*b + r, deg r < deg b.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    r = a;
    poly_trim(r);
    q.assign(r.size(), mpq_class(0));
    while (r.size() >= b.size() && !r.empty()) {
        mpq_class f = r.back() / b.back();
        size_t shift = r.size() - b.size();
        q[shift] += f;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        poly_trim(r);
    }
    poly_trim(q);
}

// x^n - 1 divided by the product of Phi_d for proper divisors d of n.
Poly cyclotomic_poly(long n) {
    if (n == 1) return Poly{mpq_class(-1), mpq_class(1)};
    Poly num(n + 1, mpq_class(0));
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        Poly phi_d = cyclotomic_poly(d);
        Poly q, r;
        poly_divmod(num, phi_d, q, r);
        if (!r.empty()) throw std::logic_error("cyclotomic polynomial division left a remainder");
        num = q;
    }
    return num;
}

struct CycloContext {
    long n = 1;
    size_t phi = 1;
    Poly modulus;                          // monic Phi_n
    std::vector<Poly> power;               // x^k mod Phi_n for k = 0 .. max_pow
    size_t max_pow = 0;

    const Poly& reduced_power(size_t k) const {
        if (k >= power.size()) throw std::logic_error("power reduction table too small");
        return power[k];
    }
};

const CycloContext& context(long n) {
    static std::map<long, std::unique_ptr<CycloContext>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto ctx = std::make_unique<CycloContext>();
    ctx->n = n;
    ctx->modulus = cyclotomic_poly(n);
    ctx->phi = ctx->modulus.size() - 1;
    ctx->max_pow = std::max<size_t>(2 * ctx->phi, static_cast<size_t>(n)) + 2;
    ctx->power.reserve(ctx->max_pow + 1);
    Poly cur(ctx->phi, mpq_class(0));
    if (ctx->phi > 0) cur[0] = 1;
    ctx->power.push_back(cur);
    for (size_t k = 1; k <= ctx->max_pow; ++k) {
        // multiply by x, then fold the overflow coordinate through Phi_n
        Poly next(ctx->phi, mpq_class(0));
        for (size_t i = 0; i + 1 < ctx->phi; ++i) next[i + 1] = cur[i];
        mpq_class top = ctx->phi > 0 ? cur[ctx->phi - 1] : mpq_class(0);
        if (top != 0) {
            for (size_t i = 0; i < ctx->phi; ++i) next[i] -= top * ctx->modulus[i];
        }
        ctx->power.push_back(next);
        cur = next;
    }
    auto& ref = *ctx;
    cache.emplace(n, std::move(ctx));
    return ref;
}

std::vector<mpq_class> reduce_product(const CycloContext& ctx,
                                      const std::vector<mpq_class>& a,
                                      const std::vector<mpq_class>& b) {
    size_t phi = ctx.phi;
    std::vector<mpq_class> conv(2 * phi - 1, mpq_class(0));
    for (size_t i = 0; i < phi; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < phi; ++j) {
            if (b[j] == 0) continue;
            conv[i + j] += a[i] * b[j];
        }
    }
    std::vector<mpq_class> out(phi, mpq_class(0));
    for (size_t k = 0; k < conv.size(); ++k) {
        if (conv[k] == 0) continue;
        if (k < phi) {
            out[k] += conv[k];
        } else {
            const Poly& red = ctx.reduced_power(k);
            for (size_t i = 0; i < phi; ++i) out[i] += conv[k] * red[i];
        }
    }
    return out;
}

// Extended Euclid over Q[x]: returns u with u*a == gcd (mod m), gcd monic.
void poly_ext_gcd(Poly a, Poly m, Poly& u, Poly& gcd) {
    Poly r0 = std::move(m), r1 = std::move(a);
    Poly s0{}, s1{mpq_class(1)};
    poly_trim(r0);
    poly_trim(r1);
    while (!r1.empty()) {
        Poly q, r;
        poly_divmod(r0, r1, q, r);
        Poly s2 = s0;
        // s2 = s0 - q*s1
        size_t need = q.size() + s1.size();
        if (s2.size() < need) s2.resize(need, mpq_class(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        poly_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.empty()) throw division_by_zero("gcd with zero polynomial");
    mpq_class lead = r0.back();
    for (auto& c : r0) c /= lead;
    for (auto& c : s0) c /= lead;
    gcd = std::move(r0);
    u = std::move(s0);
}

}  // namespace

long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

CycNum::CycNum() : n_(1), c_(1, mpq_class(0)) {}

CycNum::CycNum(long value) : n_(1), c_(1, mpq_class(value)) {}

CycNum::CycNum(long n, std::vector<mpq_class> c) : n_(n), c_(std::move(c)) {}

CycNum CycNum::rational(const mpq_class& v, long conductor) {
    const CycloContext& ctx = context(conductor);
    std::vector<mpq_class> c(ctx.phi, mpq_class(0));
    c[0] = v;
    c[0].canonicalize();
    return CycNum(conductor, std::move(c));
}

CycNum CycNum::integer(long v, long conductor) { return rational(mpq_class(v), conductor); }

CycNum CycNum::zero(long conductor) { return rational(mpq_class(0), conductor); }

CycNum CycNum::one(long conductor) { return rational(mpq_class(1), conductor); }

CycNum CycNum::zeta(long n, long k) {
    if (n < 1) throw std::invalid_argument("zeta: conductor must be positive");
    const CycloContext& ctx = context(n);
    long e = ((k % n) + n) % n;
    return CycNum(n, ctx.reduced_power(static_cast<size_t>(e)));
}

bool CycNum::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

namespace {
// Lift a pair to a common conductor when one divides the other.
void align(CycNum& a, CycNum& b) {
    if (a.conductor() == b.conductor()) return;
    if (b.conductor() % a.conductor() == 0) {
        a = a.embedded(b.conductor());
        return;
    }
    if (a.conductor() % b.conductor() == 0) {
        b = b.embedded(a.conductor());
        return;
    }
    throw conductor_mismatch("incompatible conductors " + std::to_string(a.conductor()) + " and " +
                             std::to_string(b.conductor()));
}
}  // namespace

CycNum CycNum::operator-() const {
    std::vector<mpq_class> c(c_);
    for (auto& x : c) x = -x;
    return CycNum(n_, std::move(c));
}

CycNum CycNum::operator+(const CycNum& o) const {
    CycNum a = *this, b = o;
    align(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

CycNum CycNum::operator-(const CycNum& o) const {
    CycNum a = *this, b = o;
    align(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
}

CycNum CycNum::operator*(const CycNum& o) const {
    CycNum a = *this, b = o;
    align(a, b);
    return CycNum(a.n_, reduce_product(context(a.n_), a.c_, b.c_));
}

CycNum CycNum::operator/(const CycNum& o) const { return *this * o.inverse(); }

bool CycNum::operator==(const CycNum& o) const {
    CycNum a = *this, b = o;
    align(a, b);
    return a.c_ == b.c_;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero");
    const CycloContext& ctx = context(n_);
    Poly a(c_);
    poly_trim(a);
    Poly u, g;
    poly_ext_gcd(a, ctx.modulus, u, g);
    if (g.size() != 1) throw std::logic_error("element not invertible modulo cyclotomic polynomial");
    // u*a == 1 (mod Phi_n); reduce u into the power basis
    std::vector<mpq_class> out(ctx.phi, mpq_class(0));
    for (size_t k = 0; k < u.size(); ++k) {
        if (u[k] == 0) continue;
        const Poly& red = ctx.reduced_power(k);
        for (size_t i = 0; i < ctx.phi; ++i) out[i] += u[k] * red[i];
    }
    return CycNum(n_, std::move(out));
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum acc = CycNum::one(n_);
    CycNum base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

CycNum CycNum::embedded(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw conductor_mismatch("embedding target must be a multiple of the conductor");
    const CycloContext& ctx = context(m);
    long step = m / n_;
    std::vector<mpq_class> out(ctx.phi, mpq_class(0));
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const Poly& red = ctx.reduced_power(k * static_cast<size_t>(step));
        for (size_t i = 0; i < ctx.phi; ++i) out[i] += c_[k] * red[i];
    }
    return CycNum(m, std::move(out));
}

std::optional<CycNum> CycNum::lowered(long m) const {
    if (n_ % m != 0) return std::nullopt;
    if (m == n_) return *this;
    const CycloContext& big = context(n_);
    const CycloContext& small = context(m);
    long step = n_ / m;
    // Solve sum_k x_k * (zeta_n^{step*k}) = *this by Gaussian elimination.
    size_t rows = big.phi, cols = small.phi;
    std::vector<std::vector<mpq_class>> mat(rows, std::vector<mpq_class>(cols + 1, mpq_class(0)));
    for (size_t k = 0; k < cols; ++k) {
        const Poly& red = big.reduced_power(k * static_cast<size_t>(step));
        for (size_t i = 0; i < rows; ++i) mat[i][k] = red[i];
    }
    for (size_t i = 0; i < rows; ++i) mat[i][cols] = c_[i];

    size_t rank = 0;
    std::vector<long> pivot_col(rows, -1);
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = rank;
        while (sel < rows && mat[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(mat[sel], mat[rank]);
        mpq_class inv = 1 / mat[rank][col];
        for (size_t j = col; j <= cols; ++j) mat[rank][j] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || mat[r][col] == 0) continue;
            mpq_class f = mat[r][col];
            for (size_t j = col; j <= cols; ++j) mat[r][j] -= f * mat[rank][j];
        }
        pivot_col[rank] = static_cast<long>(col);
        ++rank;
    }
    for (size_t r = rank; r < rows; ++r)
        if (mat[r][cols] != 0) return std::nullopt;
    std::vector<mpq_class> sol(cols, mpq_class(0));
    for (size_t r = 0; r < rank; ++r) sol[static_cast<size_t>(pivot_col[r])] = mat[r][cols];
    return CycNum(m, std::move(sol));
}

std::optional<long> CycNum::root_of_unity_order() const {
    if (is_zero()) return std::nullopt;
    CycNum acc = *this;
    long bound = 2 * n_;
    for (long k = 1; k <= bound; ++k) {
        if (acc.is_one()) return k;
        acc = acc * *this;
    }
    return std::nullopt;
}

std::string CycNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpq_class a = c_[i];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    if (n_ > 1) os << " (zeta " << n_ << ")";
    return os.str();
}

std::complex<double> CycNum::approx() const {
    std::complex<double> z = std::polar(1.0, 2.0 * M_PI / static_cast<double>(n_));
    std::complex<double> acc(0.0, 0.0), zp(1.0, 0.0);
    for (size_t i = 0; i < c_.size(); ++i) {
        acc += c_[i].get_d() * zp;
        zp *= z;
    }
    return acc;
}

CycNum qint(long n, const CycNum& q) {
    if (q.is_zero()) throw std::invalid_argument("qint: q must be nonzero");
    if (n < 0) throw std::invalid_argument("qint: n must be nonnegative");
    CycNum acc = CycNum::zero(q.conductor());
    CycNum p = CycNum::one(q.conductor());
    for (long i = 0; i < n; ++i) {
        acc = acc + p;
        p = p * q;
    }
    return acc;
}

CycNum qfactorial(long n, const CycNum& q) {
    CycNum acc = CycNum::one(q.conductor());
    for (long i = 1; i <= n; ++i) acc = acc * qint(i, q);
    return acc;
}

CycNum qbinom(long n, long k, const CycNum& q) {
    if (k < 0 || k > n) throw std::invalid_argument("qbinom: need 0 <= k <= n");
    if (q.is_zero()) throw std::invalid_argument("qbinom: q must be nonzero");
    // row-by-row Pascal triangle in q
    std::vector<CycNum> row{CycNum::one(q.conductor())};
    for (long m = 0; m < n; ++m) {
        std::vector<CycNum> next(static_cast<size_t>(m) + 2, CycNum::zero(q.conductor()));
        next[0] = CycNum::one(q.conductor());
        next[static_cast<size_t>(m) + 1] = CycNum::one(q.conductor());
        for (long i = 1; i <= m; ++i)
            next[static_cast<size_t>(i)] =
                row[static_cast<size_t>(i)] + row[static_cast<size_t>(i - 1)] * q.pow(m - i + 1);
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

CycNum qbinom_factorial(long n, long k, const CycNum& q) {
    if (k < 0 || k > n) throw std::invalid_argument("qbinom: need 0 <= k <= n");
    CycNum den = qfactorial(k, q) * qfactorial(n - k, q);
    if (den.is_zero()) throw division_by_zero("qbinom_factorial: denominator vanishes at this root of unity");
    return qfactorial(n, q) / den;
}

}  // namespace phopf
