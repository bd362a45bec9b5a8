#include "phopf/algebra.hpp"

#include <random>
#include <sstream>
#include <variant>

namespace phopf {

void sparse_axpy(Sparse& acc, const Sparse& v, const CycNum& c) {
    if (c.is_zero()) return;
    for (const auto& [i, x] : v) {
        auto [pos, inserted] = acc.emplace(i, x * c);
        if (!inserted) {
            pos->second += x * c;
            if (pos->second.is_zero()) acc.erase(pos);
        }
    }
}

void tensor_axpy(Tensor& acc, const Tensor& v, const CycNum& c) {
    if (c.is_zero()) return;
    for (const auto& [i, x] : v) {
        auto [pos, inserted] = acc.emplace(i, x * c);
        if (!inserted) {
            pos->second += x * c;
            if (pos->second.is_zero()) acc.erase(pos);
        }
    }
}

void HopfTables::check_owner(const AlgElement& a) const {
    if (a.owner != this) throw table_mismatch("element does not belong to these structure tables");
}

AlgElement HopfTables::element(Sparse v) const { return AlgElement{this, std::move(v)}; }

AlgElement HopfTables::basis_element(uint32_t i) const {
    Sparse v;
    v.emplace(i, CycNum::one(conductor_));
    return element(std::move(v));
}

AlgElement HopfTables::scalar(const CycNum& c) const { return scale(one_, c); }

AlgElement HopfTables::add(const AlgElement& a, const AlgElement& b) const {
    check_owner(a);
    check_owner(b);
    Sparse v = a.v;
    sparse_axpy(v, b.v, CycNum::one(conductor_));
    return element(std::move(v));
}

AlgElement HopfTables::sub(const AlgElement& a, const AlgElement& b) const {
    check_owner(a);
    check_owner(b);
    Sparse v = a.v;
    sparse_axpy(v, b.v, CycNum::integer(-1, conductor_));
    return element(std::move(v));
}

AlgElement HopfTables::scale(const AlgElement& a, const CycNum& c) const {
    check_owner(a);
    Sparse v;
    if (!c.is_zero())
        for (const auto& [i, x] : a.v) v.emplace(i, x * c);
    return element(std::move(v));
}

AlgElement HopfTables::multiply(const AlgElement& a, const AlgElement& b) const {
    check_owner(a);
    check_owner(b);
    Sparse v;
    for (const auto& [i, ci] : a.v)
        for (const auto& [j, cj] : b.v) sparse_axpy(v, mult_basis(i, j), ci * cj);
    return element(std::move(v));
}

AlgElement HopfTables::power(const AlgElement& a, long n) const {
    AlgElement acc = one_;
    for (long k = 0; k < n; ++k) acc = multiply(acc, a);
    return acc;
}

Tensor HopfTables::comult(const AlgElement& a) const {
    check_owner(a);
    Tensor t;
    for (const auto& [i, c] : a.v)
        for (const auto& [b1, b2, cc] : comult_basis(i)) {
            uint64_t key = static_cast<uint64_t>(b1) * dim_ + b2;
            auto [pos, inserted] = t.emplace(key, c * cc);
            if (!inserted) {
                pos->second += c * cc;
                if (pos->second.is_zero()) t.erase(pos);
            }
        }
    return t;
}

CycNum HopfTables::counit(const AlgElement& a) const {
    check_owner(a);
    CycNum acc = CycNum::zero(conductor_);
    for (const auto& [i, c] : a.v) acc += c * counit_basis(i);
    return acc;
}

AlgElement HopfTables::antipode(const AlgElement& a) const {
    check_owner(a);
    Sparse v;
    for (const auto& [i, c] : a.v) sparse_axpy(v, antipode_basis(i), c);
    return element(std::move(v));
}

AlgElement HopfTables::antipode_inv(const AlgElement& a) const {
    check_owner(a);
    Sparse v;
    for (const auto& [i, c] : a.v) sparse_axpy(v, antipode_inv_basis(i), c);
    return element(std::move(v));
}

Tensor HopfTables::tensor_mult(const Tensor& a, const Tensor& b) const {
    Tensor out;
    for (const auto& [k1, c1] : a) {
        uint32_t a1 = static_cast<uint32_t>(k1 / dim_), a2 = static_cast<uint32_t>(k1 % dim_);
        for (const auto& [k2, c2] : b) {
            uint32_t b1 = static_cast<uint32_t>(k2 / dim_), b2 = static_cast<uint32_t>(k2 % dim_);
            Sparse left = mult_basis(a1, b1);
            if (left.empty()) continue;
            Sparse right = mult_basis(a2, b2);
            if (right.empty()) continue;
            CycNum c = c1 * c2;
            for (const auto& [i, ci] : left)
                for (const auto& [j, cj] : right) {
                    uint64_t key = static_cast<uint64_t>(i) * dim_ + j;
                    auto [pos, inserted] = out.emplace(key, c * ci * cj);
                    if (!inserted) {
                        pos->second += c * ci * cj;
                        if (pos->second.is_zero()) out.erase(pos);
                    }
                }
        }
    }
    return out;
}

Tensor HopfTables::tensor_of(const AlgElement& a, const AlgElement& b) const {
    Tensor out;
    for (const auto& [i, ci] : a.v)
        for (const auto& [j, cj] : b.v) {
            CycNum c = ci * cj;
            if (!c.is_zero()) out.emplace(static_cast<uint64_t>(i) * dim_ + j, c);
        }
    return out;
}

std::vector<NamedElement> HopfTables::generators() const {
    std::vector<NamedElement> out = group_gens_;
    out.insert(out.end(), prim_gens_.begin(), prim_gens_.end());
    return out;
}

std::string HopfTables::describe(const AlgElement& a) const {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : a.v) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << basis_label(i);
    }
    return os.str();
}

// ---------------------------------------------------------------------------

std::shared_ptr<const AlgebraTables> AlgebraTables::build(const CartanDatum& d, AlgebraOptions opts) {
    validate_datum(d);
    auto t = std::shared_ptr<AlgebraTables>(new AlgebraTables());
    t->datum_ = d;
    t->roots_ = attach_roots(d);
    t->opts_ = opts;
    t->conductor_ = d.ambient_conductor();
    t->nichols_ = std::make_shared<NicholsAlgebra>(d, t->roots_);
    t->inv_ = d.group.invariants();
    if (d.group.order() > opts.enumeration_cap)
        throw build_error("group order exceeds the enumeration cap");
    t->gsize_ = static_cast<uint32_t>(d.group.order());
    t->bsize_ = static_cast<uint32_t>(t->nichols_->dim());
    t->dim_ = static_cast<size_t>(t->gsize_) * t->bsize_;
    t->exponent_ = d.group.exponent();

    t->zeta_pow_.reserve(static_cast<size_t>(t->exponent_));
    for (long e = 0; e < t->exponent_; ++e)
        t->zeta_pow_.push_back(CycNum::zeta(t->conductor_, e * (t->conductor_ / t->exponent_)));

    t->chi_u_.reserve(t->bsize_);
    for (uint32_t u = 0; u < t->bsize_; ++u) {
        Character chi = d.group.trivial_character();
        const auto& exps = t->nichols_->exponents(u);
        for (size_t k = 0; k < exps.size(); ++k)
            chi = d.group.add(chi, d.group.mul_pow(t->roots_.chi_root[k], exps[k]));
        t->chi_u_.push_back(std::move(chi));
    }

    t->counit_.reserve(t->dim_);
    for (uint32_t i = 0; i < t->dim_; ++i) {
        auto [u, g] = t->unpack(i);
        t->counit_.push_back(u == 0 ? CycNum::one(t->conductor_) : CycNum::zero(t->conductor_));
    }

    t->one_ = t->basis_element(t->index(0, static_cast<uint32_t>(d.group.index_of(d.group.identity()))));
    t->one_.owner = t.get();

    t->comult_cache_.resize(t->dim_);
    t->antipode_cache_.resize(t->dim_);
    t->antipode_inv_cache_.resize(t->dim_);
    t->pbw_comult_cache_.resize(t->bsize_);
    t->pbw_antipode_cache_.resize(t->bsize_);
    t->pbw_antipode_inv_cache_.resize(t->bsize_);

    for (size_t j = 0; j < t->inv_.size(); ++j) {
        std::vector<long> e(t->inv_.size(), 0);
        e[j] = 1;
        t->group_gens_.push_back({"g" + std::to_string(j + 1), t->group_element(d.group.element(e))});
    }
    for (size_t i = 0; i < d.theta(); ++i)
        t->prim_gens_.push_back({"x" + std::to_string(i + 1), t->generator_x(i)});
    for (const auto& g : d.group.enumerate(opts.enumeration_cap)) {
        std::ostringstream os;
        os << "g(";
        for (size_t j = 0; j < g.e.size(); ++j) os << (j ? "," : "") << g.e[j];
        os << ")";
        t->grouplikes_.push_back({os.str(), t->group_element(g)});
    }

    // materialize the dense tables up front at small dimension
    if (t->dim_ <= opts.table_threshold) {
        for (uint32_t i = 0; i < t->dim_; ++i) {
            t->comult_basis(i);
            t->antipode_basis(i);
            t->antipode_inv_basis(i);
        }
        // S and S^{-1} must invert each other on the whole basis
        for (uint32_t i = 0; i < t->dim_; ++i) {
            AlgElement e = t->basis_element(i);
            if (!(t->antipode(t->antipode_inv(e)) == e) || !(t->antipode_inv(t->antipode(e)) == e))
                throw build_error("antipode inverse check failed at basis index " + std::to_string(i));
        }
    }
    return t;
}

uint32_t AlgebraTables::index(uint32_t uidx, uint32_t gidx) const { return uidx * gsize_ + gidx; }

std::pair<uint32_t, uint32_t> AlgebraTables::unpack(uint32_t idx) const {
    return {idx / gsize_, idx % gsize_};
}

uint32_t AlgebraTables::gadd(uint32_t a, uint32_t b) const {
    uint32_t out = 0;
    for (size_t j = 0; j < inv_.size(); ++j) {
        // decode digit j (row-major, last fastest): recompute strides inline
        uint32_t stride = 1;
        for (size_t l = j + 1; l < inv_.size(); ++l) stride *= static_cast<uint32_t>(inv_[l]);
        uint32_t da = (a / stride) % static_cast<uint32_t>(inv_[j]);
        uint32_t db = (b / stride) % static_cast<uint32_t>(inv_[j]);
        out += ((da + db) % static_cast<uint32_t>(inv_[j])) * stride;
    }
    return out;
}

uint32_t AlgebraTables::gneg(uint32_t a) const {
    uint32_t out = 0;
    for (size_t j = 0; j < inv_.size(); ++j) {
        uint32_t stride = 1;
        for (size_t l = j + 1; l < inv_.size(); ++l) stride *= static_cast<uint32_t>(inv_[l]);
        uint32_t da = (a / stride) % static_cast<uint32_t>(inv_[j]);
        out += ((static_cast<uint32_t>(inv_[j]) - da) % static_cast<uint32_t>(inv_[j])) * stride;
    }
    return out;
}

CycNum AlgebraTables::zeta_pow(long e) const {
    long E = exponent_;
    return zeta_pow_[static_cast<size_t>(((e % E) + E) % E)];
}

CycNum AlgebraTables::chi_u_of(uint32_t uidx, uint32_t gidx) const {
    return zeta_pow(datum_.group.pair_exponent(chi_u_[uidx], datum_.group.element_at(gidx)));
}

Sparse AlgebraTables::mult_basis(uint32_t i, uint32_t j) const {
    auto [ui, gi] = unpack(i);
    auto [vj, gj] = unpack(j);
    // (y_u g)(y_v h) = chi_v(g) y_u y_v (gh)
    CycNum scalefac = chi_u_of(vj, gi);
    uint32_t gh = gadd(gi, gj);
    Sparse out;
    for (const auto& [w, c] : nichols_->product(ui, vj)) out.emplace(index(w, gh), c * scalefac);
    return out;
}

Tensor AlgebraTables::root_comult(size_t k) const {
    if (roots_.sys.height[k] == 1) {
        size_t i = 0;
        while (roots_.sys.roots[k][i] == 0) ++i;
        std::vector<int> e(roots_.p(), 0);
        e[k] = 1;
        uint32_t xi = index(nichols_->uindex(e), static_cast<uint32_t>(datum_.group.index_of(datum_.group.identity())));
        uint32_t gi = index(0, static_cast<uint32_t>(datum_.group.index_of(datum_.g[i])));
        uint32_t unit = one_.v.begin()->first;
        Tensor t;
        t.emplace(static_cast<uint64_t>(xi) * dim_ + unit, CycNum::one(conductor_));
        t.emplace(static_cast<uint64_t>(gi) * dim_ + xi, CycNum::one(conductor_));
        return t;
    }
    auto [k1, k2] = roots_.sys.split[k];
    CycNum q = datum_.group.pair(roots_.chi_root[static_cast<size_t>(k2)],
                                 roots_.g_root[static_cast<size_t>(k1)], conductor_);
    Tensor a = root_comult(static_cast<size_t>(k1));
    Tensor b = root_comult(static_cast<size_t>(k2));
    Tensor ab = tensor_mult(a, b);
    tensor_axpy(ab, tensor_mult(b, a), -q);
    return ab;
}

const Tensor& AlgebraTables::pbw_comult(uint32_t uidx) const {
    if (pbw_comult_cache_[uidx]) return *pbw_comult_cache_[uidx];
    Tensor out;
    const auto& u = nichols_->exponents(uidx);
    size_t last = 0;
    bool zero_u = true;
    for (size_t k = 0; k < u.size(); ++k)
        if (u[k] > 0) {
            last = k;
            zero_u = false;
        }
    if (zero_u) {
        uint32_t unit = one_.v.begin()->first;
        out.emplace(static_cast<uint64_t>(unit) * dim_ + unit, CycNum::one(conductor_));
    } else {
        std::vector<int> prev = u;
        prev[last] -= 1;
        out = tensor_mult(pbw_comult(nichols_->uindex(prev)), root_comult(last));
    }
    pbw_comult_cache_[uidx] = std::move(out);
    return *pbw_comult_cache_[uidx];
}

const std::vector<Trip>& AlgebraTables::comult_basis(uint32_t i) const {
    std::lock_guard<std::mutex> lock(cache_mtx_);
    if (comult_cache_[i]) return *comult_cache_[i];
    auto [u, g] = unpack(i);
    std::vector<Trip> out;
    // Delta(y_u g) = Delta(y_u) (g (x) g): pure index shift on group parts
    for (const auto& [key, c] : pbw_comult(u)) {
        uint32_t b1 = static_cast<uint32_t>(key / dim_), b2 = static_cast<uint32_t>(key % dim_);
        auto [u1, g1] = unpack(b1);
        auto [u2, g2] = unpack(b2);
        out.emplace_back(index(u1, gadd(g1, g)), index(u2, gadd(g2, g)), c);
    }
    comult_cache_[i] = std::move(out);
    return *comult_cache_[i];
}

const CycNum& AlgebraTables::counit_basis(uint32_t i) const { return counit_[i]; }

Sparse AlgebraTables::root_antipode(size_t k, bool inverse) const {
    if (roots_.sys.height[k] == 1) {
        size_t i = 0;
        while (roots_.sys.roots[k][i] == 0) ++i;
        std::vector<int> e(roots_.p(), 0);
        e[k] = 1;
        uint32_t gi_neg = static_cast<uint32_t>(datum_.group.index_of(datum_.group.neg(datum_.g[i])));
        uint32_t xg = index(nichols_->uindex(e), gi_neg);
        Sparse out;
        if (!inverse) {
            // S(x_i) = -g_i^{-1} x_i = -chi_i(g_i)^{-1} x_i g_i^{-1}
            CycNum c = -zeta_pow(-datum_.group.pair_exponent(datum_.chi[i], datum_.g[i]));
            out.emplace(xg, c);
        } else {
            // S^{-1}(x_i) = -x_i g_i^{-1}
            out.emplace(xg, CycNum::integer(-1, conductor_));
        }
        return out;
    }
    auto [k1, k2] = roots_.sys.split[k];
    CycNum q = datum_.group.pair(roots_.chi_root[static_cast<size_t>(k2)],
                                 roots_.g_root[static_cast<size_t>(k1)], conductor_);
    AlgElement s1 = element(root_antipode(static_cast<size_t>(k1), inverse));
    AlgElement s2 = element(root_antipode(static_cast<size_t>(k2), inverse));
    // antiautomorphism on y_k = y_k1 y_k2 - q y_k2 y_k1
    AlgElement out = sub(multiply(s2, s1), scale(multiply(s1, s2), q));
    return out.v;
}

const Sparse& AlgebraTables::pbw_antipode(uint32_t uidx, bool inverse) const {
    auto& cache = inverse ? pbw_antipode_inv_cache_ : pbw_antipode_cache_;
    if (cache[uidx]) return *cache[uidx];
    const auto& u = nichols_->exponents(uidx);
    size_t last = 0;
    bool zero_u = true;
    for (size_t k = 0; k < u.size(); ++k)
        if (u[k] > 0) {
            last = k;
            zero_u = false;
        }
    Sparse out;
    if (zero_u) {
        out = one_.v;
    } else {
        std::vector<int> prev = u;
        prev[last] -= 1;
        // S(y_{u'} y_k) = S(y_k) S(y_{u'})
        AlgElement sk = element(root_antipode(last, inverse));
        AlgElement su = element(pbw_antipode(nichols_->uindex(prev), inverse));
        out = multiply(sk, su).v;
    }
    cache[uidx] = std::move(out);
    return *cache[uidx];
}

const Sparse& AlgebraTables::antipode_basis(uint32_t i) const {
    std::lock_guard<std::mutex> lock(cache_mtx_);
    if (antipode_cache_[i]) return *antipode_cache_[i];
    auto [u, g] = unpack(i);
    // S(y_u g) = g^{-1} S(y_u); left group factor twists by chi_w(g^{-1})
    Sparse out;
    uint32_t gn = gneg(g);
    for (const auto& [idx, c] : pbw_antipode(u, false)) {
        auto [w, h] = unpack(idx);
        out.emplace(index(w, gadd(gn, h)), c * chi_u_of(w, gn));
    }
    antipode_cache_[i] = std::move(out);
    return *antipode_cache_[i];
}

const Sparse& AlgebraTables::antipode_inv_basis(uint32_t i) const {
    std::lock_guard<std::mutex> lock(cache_mtx_);
    if (antipode_inv_cache_[i]) return *antipode_inv_cache_[i];
    auto [u, g] = unpack(i);
    Sparse out;
    uint32_t gn = gneg(g);
    for (const auto& [idx, c] : pbw_antipode(u, true)) {
        auto [w, h] = unpack(idx);
        out.emplace(index(w, gadd(gn, h)), c * chi_u_of(w, gn));
    }
    antipode_inv_cache_[i] = std::move(out);
    return *antipode_inv_cache_[i];
}

std::string AlgebraTables::basis_label(uint32_t i) const {
    auto [u, g] = unpack(i);
    std::ostringstream os;
    const auto& exps = nichols_->exponents(u);
    bool any = false;
    for (size_t k = 0; k < exps.size(); ++k) {
        if (exps[k] == 0) continue;
        any = true;
        os << "y" << (k + 1);
        if (exps[k] > 1) os << "^" << exps[k];
        os << " ";
    }
    GroupElement ge = datum_.group.element_at(g);
    if (!datum_.group.is_identity(ge)) {
        any = true;
        os << "g(";
        for (size_t j = 0; j < ge.e.size(); ++j) os << (j ? "," : "") << ge.e[j];
        os << ")";
    }
    if (!any) return "1";
    std::string s = os.str();
    if (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

AlgElement AlgebraTables::group_element(const GroupElement& g) const {
    return basis_element(index(0, static_cast<uint32_t>(datum_.group.index_of(g))));
}

AlgElement AlgebraTables::generator_x(size_t i) const {
    std::vector<int> u(roots_.p(), 0);
    u[static_cast<size_t>(roots_.sys.simple_position[i])] = 1;
    return basis_word(u, datum_.group.identity());
}

AlgElement AlgebraTables::root_vector(size_t k) const {
    std::vector<int> u(roots_.p(), 0);
    u[k] = 1;
    return basis_word(u, datum_.group.identity());
}

AlgElement AlgebraTables::basis_word(const std::vector<int>& u, const GroupElement& g) const {
    return basis_element(index(nichols_->uindex(u), static_cast<uint32_t>(datum_.group.index_of(g))));
}

AlgElement AlgebraTables::word_element(const std::vector<std::variant<GroupElement, size_t>>& w) const {
    AlgElement acc = one_;
    for (const auto& part : w) {
        if (std::holds_alternative<GroupElement>(part))
            acc = multiply(acc, group_element(std::get<GroupElement>(part)));
        else
            acc = multiply(acc, generator_x(std::get<size_t>(part)));
    }
    return acc;
}

const std::vector<int>& AlgebraTables::zdegree(uint32_t idx) const {
    return nichols_->multidegree(unpack(idx).first);
}

AlgElement AlgebraTables::conjugate_by_group(const GroupElement& g, const AlgElement& a) const {
    check_owner(a);
    AlgElement ge = group_element(g);
    AlgElement gi = group_element(datum_.group.neg(g));
    return multiply(multiply(ge, a), gi);
}

AlgElement AlgebraTables::braided_ad(const AlgElement& x, const AlgElement& y) const {
    check_owner(x);
    check_owner(y);
    if (x.is_zero()) return zero();
    std::optional<std::vector<int>> deg;
    for (const auto& [i, c] : x.v) {
        const auto& d = zdegree(i);
        if (!deg) deg = d;
        else if (*deg != d)
            throw std::invalid_argument("braided_ad: left argument is not Z^theta-homogeneous");
    }
    GroupElement gx = datum_.group.identity();
    for (size_t i = 0; i < datum_.theta(); ++i)
        gx = datum_.group.add(gx, datum_.group.mul_pow(datum_.g[i], (*deg)[i]));
    return sub(multiply(x, y), multiply(conjugate_by_group(gx, y), x));
}

AlgElement HopfTables::hopf_ad(const AlgElement& x, const AlgElement& y) const {
    check_owner(x);
    check_owner(y);
    AlgElement acc = zero();
    for (const auto& [i, c] : x.v)
        for (const auto& [b1, b2, cc] : comult_basis(i)) {
            AlgElement term = multiply(multiply(basis_element(b1), y), antipode(basis_element(b2)));
            acc = add(acc, scale(term, c * cc));
        }
    return acc;
}

// ---------------------------------------------------------------------------

CheckReport verify_build(const AlgebraTables& t, CheckLevel level, size_t random_pairs, uint64_t seed) {
    CheckReport rep;
    size_t dim = t.dim();
    long cond = t.conductor();

    rep.add("dimension = |G| * prod N_beta",
            dim == t.group().order() * t.root_data().pbw_count(),
            "dim = " + std::to_string(dim));

    // per-element coalgebra axioms
    bool coassoc = true, counit_ok = true, antipode_ok = true;
    for (uint32_t i = 0; i < dim && (coassoc || counit_ok || antipode_ok); ++i) {
        AlgElement e = t.basis_element(i);
        Tensor d = t.comult(e);
        // (Delta (x) id) Delta vs (id (x) Delta) Delta
        Tensor3 left, right;
        for (const auto& [key, c] : d) {
            uint32_t b1 = static_cast<uint32_t>(key / dim), b2 = static_cast<uint32_t>(key % dim);
            for (const auto& [c1, c2, cc] : t.comult_basis(b1)) {
                uint64_t k3 = (static_cast<uint64_t>(c1) * dim + c2) * dim + b2;
                auto [pos, ins] = left.emplace(k3, c * cc);
                if (!ins) {
                    pos->second += c * cc;
                    if (pos->second.is_zero()) left.erase(pos);
                }
            }
            for (const auto& [c1, c2, cc] : t.comult_basis(b2)) {
                uint64_t k3 = (static_cast<uint64_t>(b1) * dim + c1) * dim + c2;
                auto [pos, ins] = right.emplace(k3, c * cc);
                if (!ins) {
                    pos->second += c * cc;
                    if (pos->second.is_zero()) right.erase(pos);
                }
            }
        }
        if (left != right) coassoc = false;

        Sparse eps_id, id_eps;
        for (const auto& [key, c] : d) {
            uint32_t b1 = static_cast<uint32_t>(key / dim), b2 = static_cast<uint32_t>(key % dim);
            CycNum l = c * t.counit_basis(b1);
            if (!l.is_zero()) {
                auto [pos, ins] = eps_id.emplace(b2, l);
                if (!ins) {
                    pos->second += l;
                    if (pos->second.is_zero()) eps_id.erase(pos);
                }
            }
            CycNum r = c * t.counit_basis(b2);
            if (!r.is_zero()) {
                auto [pos, ins] = id_eps.emplace(b1, r);
                if (!ins) {
                    pos->second += r;
                    if (pos->second.is_zero()) id_eps.erase(pos);
                }
            }
        }
        if (eps_id != e.v || id_eps != e.v) counit_ok = false;

        AlgElement s_conv = t.zero(), conv_s = t.zero();
        for (const auto& [key, c] : d) {
            uint32_t b1 = static_cast<uint32_t>(key / dim), b2 = static_cast<uint32_t>(key % dim);
            s_conv = t.add(s_conv, t.scale(t.multiply(t.antipode(t.basis_element(b1)), t.basis_element(b2)), c));
            conv_s = t.add(conv_s, t.scale(t.multiply(t.basis_element(b1), t.antipode(t.basis_element(b2))), c));
        }
        AlgElement target = t.scale(t.one(), t.counit_basis(i));
        if (!(s_conv == target) || !(conv_s == target)) antipode_ok = false;
    }
    rep.add("coassociativity on the basis", coassoc);
    rep.add("counit axiom on the basis", counit_ok);
    rep.add("antipode axiom on the basis", antipode_ok);

    // multiplicative identities: Delta(ab) = Delta(a)Delta(b),
    // eps(ab) = eps(a)eps(b), S(ab) = S(b)S(a)
    auto pair_ok = [&](uint32_t i, uint32_t j) {
        AlgElement a = t.basis_element(i), b = t.basis_element(j);
        AlgElement ab = t.multiply(a, b);
        if (t.comult(ab) != t.tensor_mult(t.comult(a), t.comult(b))) return false;
        if (t.counit(ab) != t.counit(a) * t.counit(b)) return false;
        if (!(t.antipode(ab) == t.multiply(t.antipode(b), t.antipode(a)))) return false;
        return true;
    };

    bool mult_ids = true;
    std::string mult_detail;
    if (level == CheckLevel::full_basis) {
        for (uint32_t i = 0; i < dim && mult_ids; ++i)
            for (uint32_t j = 0; j < dim && mult_ids; ++j) mult_ids = pair_ok(i, j);
        mult_detail = "all " + std::to_string(dim * dim) + " basis pairs";
    } else {
        for (const auto& gen : t.generators()) {
            uint32_t gi = gen.elt.v.begin()->first;
            for (uint32_t j = 0; j < dim && mult_ids; ++j) mult_ids = mult_ids && pair_ok(gi, j);
        }
        std::mt19937_64 rng(seed);
        for (size_t k = 0; k < random_pairs && mult_ids; ++k)
            mult_ids = pair_ok(static_cast<uint32_t>(rng() % dim), static_cast<uint32_t>(rng() % dim));
        mult_detail = "generator x basis pairs (determining) + " + std::to_string(random_pairs) +
                      " random pairs";
    }
    rep.add("Delta, eps, S are (anti)multiplicative", mult_ids, mult_detail);

    // associativity on random triples
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    bool assoc = true;
    size_t triples = std::min<size_t>(1000, dim * dim);
    for (size_t k = 0; k < triples && assoc; ++k) {
        AlgElement a = t.basis_element(static_cast<uint32_t>(rng() % dim));
        AlgElement b = t.basis_element(static_cast<uint32_t>(rng() % dim));
        AlgElement c = t.basis_element(static_cast<uint32_t>(rng() % dim));
        assoc = t.multiply(t.multiply(a, b), c) == t.multiply(a, t.multiply(b, c));
    }
    rep.add("associativity on random basis triples", assoc, std::to_string(triples) + " triples");

    // defining relations
    const auto& d = t.datum();
    bool comm_ok = true;
    for (size_t i = 0; i < d.theta() && comm_ok; ++i)
        for (const auto& g : d.group.enumerate(t.group().order()) ) {
            AlgElement lhs = t.multiply(t.group_element(g), t.generator_x(i));
            AlgElement rhs = t.scale(t.multiply(t.generator_x(i), t.group_element(g)),
                                     d.group.pair(d.chi[i], g, cond));
            if (!(lhs == rhs)) {
                comm_ok = false;
                break;
            }
        }
    rep.add("g x_i = chi_i(g) x_i g", comm_ok);

    bool serre_ok = true;
    for (size_t i = 0; i < d.theta(); ++i)
        for (size_t j = 0; j < d.theta(); ++j) {
            if (i == j) continue;
            AlgElement z = t.generator_x(j);
            for (int k = 0; k < 1 - d.cartan(i, j); ++k) z = t.braided_ad(t.generator_x(i), z);
            if (!z.is_zero()) serre_ok = false;
        }
    rep.add("quantum Serre relations ad_c(x_i)^{1-a_ij}(x_j) = 0", serre_ok);

    bool nilp_ok = true;
    for (size_t k = 0; k < t.root_data().p(); ++k) {
        if (!t.power(t.root_vector(k), t.root_data().N[k]).is_zero()) nilp_ok = false;
    }
    rep.add("root vector nilpotency y_k^{N_k} = 0", nilp_ok);

    bool s2_ok = true;
    for (size_t i = 0; i < d.theta(); ++i) {
        AlgElement s2 = t.antipode(t.antipode(t.generator_x(i)));
        AlgElement expect = t.scale(t.generator_x(i), d.q_ii(i).inverse());
        if (!(s2 == expect)) s2_ok = false;
    }
    rep.add("S^2(x_i) = chi_i(g_i)^{-1} x_i", s2_ok);

    // grading: deg(ab) = deg(a) + deg(b) on sampled homogeneous pairs
    bool grading = true;
    for (size_t k = 0; k < 500 && grading; ++k) {
        uint32_t i = static_cast<uint32_t>(rng() % dim), j = static_cast<uint32_t>(rng() % dim);
        std::vector<int> want = t.zdegree(i);
        for (size_t s = 0; s < want.size(); ++s) want[s] += t.zdegree(j)[s];
        for (const auto& [w, c] : t.mult_basis(i, j))
            if (t.zdegree(w) != want) grading = false;
    }
    rep.add("multiplication preserves the Z^theta-degree", grading);

    return rep;
}

}  // namespace phopf
