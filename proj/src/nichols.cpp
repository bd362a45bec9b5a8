#include "phopf/nichols.hpp"

#include <deque>
#include <sstream>

namespace phopf {

namespace {
bool degree_leq(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}
}  // namespace

NicholsAlgebra::NicholsAlgebra(const CartanDatum& d, const RootData& roots)
    : datum_(d), roots_(roots), conductor_(d.ambient_conductor()), theta_(d.theta()) {
    d_top_.assign(theta_, 0);
    for (size_t k = 0; k < roots_.p(); ++k)
        for (size_t s = 0; s < theta_; ++s) d_top_[s] += (roots_.N[k] - 1) * roots_.sys.roots[k][s];

    // root vectors along the splitting plan
    root_rep_.resize(roots_.p());
    for (size_t k = 0; k < roots_.p(); ++k) {
        if (roots_.sys.height[k] == 1) {
            size_t i = 0;
            while (roots_.sys.roots[k][i] == 0) ++i;
            root_rep_[k] = FreePoly::letter(static_cast<uint8_t>(i), conductor_);
        } else {
            auto [k1, k2] = roots_.sys.split[k];
            CycNum q = datum_.group.pair(roots_.chi_root[static_cast<size_t>(k2)],
                                         roots_.g_root[static_cast<size_t>(k1)], conductor_);
            const FreePoly& a = root_rep_[static_cast<size_t>(k1)];
            const FreePoly& b = root_rep_[static_cast<size_t>(k2)];
            root_rep_[k] = a * b - (b * a).scaled(q);
        }
    }

    // defining relations: quantum Serre for i != j, root-vector nilpotencies
    std::vector<FreePoly> pending;
    for (size_t i = 0; i < theta_; ++i)
        for (size_t j = 0; j < theta_; ++j) {
            if (i == j) continue;
            long n = 1 - datum_.cartan(i, j);
            FreePoly z = FreePoly::letter(static_cast<uint8_t>(j), conductor_);
            FreePoly xi = FreePoly::letter(static_cast<uint8_t>(i), conductor_);
            for (long k = 0; k < n; ++k) {
                Character chi_z = datum_.group.add(datum_.group.mul_pow(datum_.chi[i], k), datum_.chi[j]);
                CycNum scale = datum_.group.pair(chi_z, datum_.g[i], conductor_);
                z = xi * z - (z * xi).scaled(scale);
            }
            pending.push_back(std::move(z));
        }
    for (size_t k = 0; k < roots_.p(); ++k) {
        std::vector<int> deg(theta_, 0);
        for (size_t s = 0; s < theta_; ++s) deg[s] = roots_.N[k] * roots_.sys.roots[k][s];
        if (!in_cone(deg)) continue;  // already zero by truncation
        FreePoly pw = FreePoly::unit(conductor_);
        for (long e = 0; e < roots_.N[k]; ++e) pw = pw * root_rep_[k];
        pending.push_back(std::move(pw));
    }

    complete(std::move(pending));
    enumerate_irreducible();

    unsigned long long expect = roots_.pbw_count();
    if (irr_words_.size() != expect) {
        std::ostringstream os;
        os << "completion failed to confirm the expected dimension: " << irr_words_.size()
           << " irreducible words inside the cone, expected " << expect << "; per-degree counts:";
        std::map<std::vector<int>, size_t> hist;
        for (const auto& w : irr_words_) ++hist[word_degree(w, theta_)];
        for (const auto& [deg, cnt] : hist) {
            os << " (";
            for (size_t s = 0; s < deg.size(); ++s) os << (s ? "," : "") << deg[s];
            os << "):" << cnt;
        }
        if (std::getenv("PHOPF_DEBUG_COMPLETION")) {
            os << "\nrules:";
            for (const auto& r : rules_) {
                os << "\n  ";
                for (uint8_t a : r.lead) os << "x" << (int)a + 1 << " ";
                os << "-> " << r.rhs.size() << " terms";
            }
        }
        throw build_error(os.str());
    }
    dim_ = irr_words_.size();

    build_pbw_basis();
}

bool NicholsAlgebra::in_cone(const std::vector<int>& d) const { return degree_leq(d, d_top_); }

FreePoly NicholsAlgebra::reduce(FreePoly f) const {
    FreePoly out;
    while (!f.is_zero()) {
        auto [w, c] = *f.terms().rbegin();
        f.add_term(w, -c);
        if (!in_cone(word_degree(w, theta_))) continue;
        bool rewritten = false;
        for (size_t pos = 0; pos < w.size() && !rewritten; ++pos) {
            for (const auto& r : rules_) {
                if (pos + r.lead.size() > w.size()) continue;
                if (!std::equal(r.lead.begin(), r.lead.end(), w.begin() + static_cast<long>(pos))) continue;
                Word prefix(w.begin(), w.begin() + static_cast<long>(pos));
                Word suffix(w.begin() + static_cast<long>(pos + r.lead.size()), w.end());
                for (const auto& [t, ct] : r.rhs.terms()) {
                    Word nw = prefix;
                    nw.insert(nw.end(), t.begin(), t.end());
                    nw.insert(nw.end(), suffix.begin(), suffix.end());
                    f.add_term(nw, c * ct);
                }
                rewritten = true;
                break;
            }
        }
        if (!rewritten) out.add_term(w, c);
    }
    return out;
}

void NicholsAlgebra::complete(std::vector<FreePoly> initial) {
    std::deque<FreePoly> pending(initial.begin(), initial.end());

    auto enqueue_pairs = [&](size_t ri, size_t si) {
        const Word& w = rules_[ri].lead;
        const Word& v = rules_[si].lead;
        // overlap: proper suffix of w equals proper prefix of v
        for (size_t len = 1; len < std::min(w.size(), v.size()); ++len) {
            if (!std::equal(v.begin(), v.begin() + static_cast<long>(len),
                            w.end() - static_cast<long>(len)))
                continue;
            Word amb = w;
            amb.insert(amb.end(), v.begin() + static_cast<long>(len), v.end());
            if (!in_cone(word_degree(amb, theta_))) continue;
            Word prefix(w.begin(), w.end() - static_cast<long>(len));
            Word suffix(v.begin() + static_cast<long>(len), v.end());
            FreePoly s = rules_[ri].rhs * FreePoly::monomial(suffix, CycNum::one(conductor_)) -
                         FreePoly::monomial(prefix, CycNum::one(conductor_)) * rules_[si].rhs;
            if (!s.is_zero()) pending.push_back(std::move(s));
        }
        // inclusion: v properly inside w
        if (v.size() < w.size()) {
            for (size_t pos = 0; pos + v.size() <= w.size(); ++pos) {
                if (!std::equal(v.begin(), v.end(), w.begin() + static_cast<long>(pos))) continue;
                if (!in_cone(word_degree(w, theta_))) continue;
                Word prefix(w.begin(), w.begin() + static_cast<long>(pos));
                Word suffix(w.begin() + static_cast<long>(pos + v.size()), w.end());
                FreePoly s = rules_[ri].rhs - FreePoly::monomial(prefix, CycNum::one(conductor_)) *
                                                  rules_[si].rhs *
                                                  FreePoly::monomial(suffix, CycNum::one(conductor_));
                if (!s.is_zero()) pending.push_back(std::move(s));
            }
        }
    };

    while (!pending.empty()) {
        FreePoly f = reduce(std::move(pending.front()));
        pending.pop_front();
        if (f.is_zero()) continue;
        const auto& [lead, c] = f.leading();
        FreePoly monic = f.scaled(c.inverse());
        RewriteRule r;
        r.lead = lead;
        r.rhs = FreePoly::monomial(lead, CycNum::one(conductor_)) - monic;
        rules_.push_back(std::move(r));
        size_t ri = rules_.size() - 1;
        for (size_t si = 0; si < rules_.size(); ++si) {
            enqueue_pairs(ri, si);
            if (si != ri) enqueue_pairs(si, ri);
        }
    }
}

void NicholsAlgebra::enumerate_irreducible() {
    // Depth-first over the prefix-closed set of irreducible words in the cone.
    std::vector<Word> stack{Word{}};
    while (!stack.empty()) {
        Word w = std::move(stack.back());
        stack.pop_back();
        irr_words_.push_back(w);
        for (size_t a = 0; a < theta_; ++a) {
            Word nw = w;
            nw.push_back(static_cast<uint8_t>(a));
            if (!in_cone(word_degree(nw, theta_))) continue;
            bool reducible = false;
            for (const auto& r : rules_) {
                if (r.lead.size() > nw.size()) continue;
                if (std::equal(r.lead.begin(), r.lead.end(), nw.end() - static_cast<long>(r.lead.size()))) {
                    reducible = true;
                    break;
                }
            }
            if (!reducible) stack.push_back(std::move(nw));
        }
    }
    std::sort(irr_words_.begin(), irr_words_.end(), DegLexLess{});
    for (uint32_t i = 0; i < irr_words_.size(); ++i) irr_index_.emplace(irr_words_[i], i);
}

const NicholsAlgebra::IrrVec& NicholsAlgebra::word_nf(const Word& w) const {
    auto it = nf_memo_.find(w);
    if (it != nf_memo_.end()) return it->second;

    IrrVec out;
    if (!in_cone(word_degree(w, theta_))) {
        return nf_memo_.emplace(w, std::move(out)).first->second;
    }
    const RewriteRule* hit = nullptr;
    size_t hit_pos = 0;
    for (size_t pos = 0; pos < w.size() && !hit; ++pos)
        for (const auto& r : rules_) {
            if (pos + r.lead.size() > w.size()) continue;
            if (std::equal(r.lead.begin(), r.lead.end(), w.begin() + static_cast<long>(pos))) {
                hit = &r;
                hit_pos = pos;
                break;
            }
        }
    if (!hit) {
        auto idx = irr_index_.find(w);
        if (idx == irr_index_.end()) throw std::logic_error("irreducible word missing from the index");
        out.emplace_back(idx->second, CycNum::one(conductor_));
        return nf_memo_.emplace(w, std::move(out)).first->second;
    }
    std::map<uint32_t, CycNum> acc;
    Word prefix(w.begin(), w.begin() + static_cast<long>(hit_pos));
    Word suffix(w.begin() + static_cast<long>(hit_pos + hit->lead.size()), w.end());
    for (const auto& [t, ct] : hit->rhs.terms()) {
        Word nw = prefix;
        nw.insert(nw.end(), t.begin(), t.end());
        nw.insert(nw.end(), suffix.begin(), suffix.end());
        for (const auto& [i, c] : word_nf(nw)) {
            auto [pos2, inserted] = acc.emplace(i, c * ct);
            if (!inserted) {
                pos2->second += c * ct;
                if (pos2->second.is_zero()) acc.erase(pos2);
            }
        }
    }
    out.assign(acc.begin(), acc.end());
    return nf_memo_.emplace(w, std::move(out)).first->second;
}

NicholsAlgebra::IrrVec NicholsAlgebra::poly_nf(const FreePoly& f) const {
    std::map<uint32_t, CycNum> acc;
    for (const auto& [w, c] : f.terms())
        for (const auto& [i, ci] : word_nf(w)) {
            auto [pos, inserted] = acc.emplace(i, c * ci);
            if (!inserted) {
                pos->second += c * ci;
                if (pos->second.is_zero()) acc.erase(pos);
            }
        }
    return IrrVec(acc.begin(), acc.end());
}

void NicholsAlgebra::build_pbw_basis() {
    // exponent vectors, row-major with the last root index fastest
    size_t pp = roots_.p();
    std::vector<int> u(pp, 0);
    while (true) {
        exp_index_.emplace(u, static_cast<uint32_t>(exps_.size()));
        exps_.push_back(u);
        std::vector<int> md(theta_, 0);
        for (size_t k = 0; k < pp; ++k)
            for (size_t s = 0; s < theta_; ++s) md[s] += u[k] * roots_.sys.roots[k][s];
        mdeg_.push_back(std::move(md));
        size_t k = pp;
        bool carry = true;
        while (k > 0 && carry) {
            --k;
            if (++u[k] < roots_.N[k]) {
                carry = false;
            } else {
                u[k] = 0;
            }
        }
        if (pp == 0 || carry) break;
    }
    if (exps_.size() != dim_) throw std::logic_error("PBW exponent count mismatch");

    // [P | I] row reduction; P column u = word_nf(pbw_rep(u))
    size_t n = dim_;
    std::vector<std::vector<CycNum>> mat(n, std::vector<CycNum>(2 * n, CycNum::zero(conductor_)));
    for (uint32_t col = 0; col < n; ++col) {
        for (const auto& [row, c] : poly_nf(pbw_rep(col))) mat[row][col] = c;
        mat[col][n + col] = CycNum::one(conductor_);
    }
    for (size_t colrow = 0; colrow < n; ++colrow) {
        size_t sel = colrow;
        while (sel < n && mat[sel][colrow].is_zero()) ++sel;
        if (sel == n)
            throw build_error("PBW monomials are not linearly independent in the completed quotient");
        std::swap(mat[sel], mat[colrow]);
        CycNum inv = mat[colrow][colrow].inverse();
        for (size_t j = colrow; j < 2 * n; ++j)
            if (!mat[colrow][j].is_zero()) mat[colrow][j] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == colrow || mat[r][colrow].is_zero()) continue;
            CycNum f = mat[r][colrow];
            for (size_t j = colrow; j < 2 * n; ++j)
                if (!mat[colrow][j].is_zero()) mat[r][j] -= f * mat[colrow][j];
        }
    }
    solve_rows_.assign(n, std::vector<CycNum>(n, CycNum::zero(conductor_)));
    for (size_t r = 0; r < n; ++r)
        for (size_t j = 0; j < n; ++j) solve_rows_[r][j] = mat[r][n + j];
}

uint32_t NicholsAlgebra::uindex(const std::vector<int>& u) const {
    auto it = exp_index_.find(u);
    if (it == exp_index_.end()) throw std::out_of_range("exponent vector outside the PBW box");
    return it->second;
}

FreePoly NicholsAlgebra::pbw_rep(uint32_t uidx) const {
    FreePoly f = FreePoly::unit(conductor_);
    const auto& u = exps_[uidx];
    for (size_t k = 0; k < u.size(); ++k)
        for (int e = 0; e < u[k]; ++e) f = f * root_rep_[k];
    return f;
}

PbwVec NicholsAlgebra::irr_to_pbw(const IrrVec& v) const {
    std::map<uint32_t, CycNum> acc;
    for (const auto& [j, c] : v)
        for (uint32_t i = 0; i < dim_; ++i) {
            if (solve_rows_[i][j].is_zero()) continue;
            auto [pos, inserted] = acc.emplace(i, solve_rows_[i][j] * c);
            if (!inserted) {
                pos->second += solve_rows_[i][j] * c;
                if (pos->second.is_zero()) acc.erase(pos);
            }
        }
    return PbwVec(acc.begin(), acc.end());
}

PbwVec NicholsAlgebra::normal_form_pbw(const FreePoly& f) const {
    std::lock_guard<std::mutex> lock(memo_mtx_);
    return irr_to_pbw(poly_nf(f));
}

PbwVec NicholsAlgebra::product(uint32_t ui, uint32_t vi) const {
    std::lock_guard<std::mutex> lock(memo_mtx_);
    uint64_t key = static_cast<uint64_t>(ui) * dim_ + vi;
    auto it = product_memo_.find(key);
    if (it != product_memo_.end()) return it->second;
    PbwVec out = irr_to_pbw(poly_nf(pbw_rep(ui) * pbw_rep(vi)));
    return product_memo_.emplace(key, std::move(out)).first->second;
}

std::map<std::vector<int>, size_t> NicholsAlgebra::degree_dimensions() const {
    std::map<std::vector<int>, size_t> out;
    for (const auto& w : irr_words_) ++out[word_degree(w, theta_)];
    return out;
}

}  // namespace phopf
