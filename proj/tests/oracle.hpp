#pragma once

// Test-only oracle: the graded quotient of the free algebra by the defining
// ideal, computed with plain linear algebra per multidegree. Independent of
// the rewriting engine: it expands its own relations and row-reduces word
// spans, so agreement with the engine is a genuine cross-check.

#include <algorithm>
#include <map>
#include <vector>

#include "phopf/cartan.hpp"

namespace oracle {

using phopf::CycNum;
using OWord = std::vector<int>;
using OPoly = std::map<OWord, CycNum>;

inline void opoly_add(OPoly& p, const OWord& w, const CycNum& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = p.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

inline OPoly opoly_mul(const OPoly& a, const OPoly& b) {
    OPoly out;
    for (const auto& [w1, c1] : a)
        for (const auto& [w2, c2] : b) {
            OWord w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            opoly_add(out, w, c1 * c2);
        }
    return out;
}

class FreeQuotient {
public:
    FreeQuotient(const phopf::CartanDatum& d, const phopf::RootData& roots)
        : d_(d), roots_(roots), cond_(d.ambient_conductor()), theta_(d.theta()) {
        // own expansion of the root vectors along the splitting plan
        std::vector<OPoly> rv(roots.p());
        for (size_t k = 0; k < roots.p(); ++k) {
            if (roots.sys.height[k] == 1) {
                size_t i = 0;
                while (roots.sys.roots[k][i] == 0) ++i;
                opoly_add(rv[k], OWord{static_cast<int>(i)}, CycNum::one(cond_));
            } else {
                auto [k1, k2] = roots.sys.split[k];
                CycNum q = d.group.pair(roots.chi_root[k2], roots.g_root[k1], cond_);
                OPoly ab = opoly_mul(rv[k1], rv[k2]);
                for (const auto& [w, c] : opoly_mul(rv[k2], rv[k1])) opoly_add(ab, w, -(c * q));
                rv[k] = std::move(ab);
            }
        }
        // Serre relations, expanded with our own braided commutator
        for (size_t i = 0; i < theta_; ++i)
            for (size_t j = 0; j < theta_; ++j) {
                if (i == j) continue;
                OPoly z;
                opoly_add(z, OWord{static_cast<int>(j)}, CycNum::one(cond_));
                OPoly xi;
                opoly_add(xi, OWord{static_cast<int>(i)}, CycNum::one(cond_));
                for (int k = 0; k < 1 - d.cartan(i, j); ++k) {
                    phopf::Character chi_z = d.group.add(d.group.mul_pow(d.chi[i], k), d.chi[j]);
                    CycNum s = d.group.pair(chi_z, d.g[i], cond_);
                    OPoly nz = opoly_mul(xi, z);
                    for (const auto& [w, c] : opoly_mul(z, xi)) opoly_add(nz, w, -(c * s));
                    z = std::move(nz);
                }
                relations_.push_back(std::move(z));
            }
        for (size_t k = 0; k < roots.p(); ++k) {
            OPoly pw;
            opoly_add(pw, OWord{}, CycNum::one(cond_));
            for (long e = 0; e < roots.N[k]; ++e) pw = opoly_mul(pw, rv[k]);
            relations_.push_back(std::move(pw));
        }
    }

    std::vector<int> degree(const OWord& w) const {
        std::vector<int> deg(theta_, 0);
        for (int a : w) ++deg[a];
        return deg;
    }

    const std::vector<OWord>& words_of_degree(const std::vector<int>& deg) {
        auto it = words_.find(deg);
        if (it != words_.end()) return it->second;
        std::vector<OWord> out;
        OWord cur;
        gen_words(deg, cur, out);
        std::sort(out.begin(), out.end());
        return words_.emplace(deg, std::move(out)).first->second;
    }

    // reduced row echelon of the ideal component at a multidegree
    const std::vector<std::vector<CycNum>>& ideal_rows(const std::vector<int>& deg) {
        auto it = rows_.find(deg);
        if (it != rows_.end()) return it->second;
        const auto& words = words_of_degree(deg);
        std::map<OWord, size_t> index;
        for (size_t k = 0; k < words.size(); ++k) index[words[k]] = k;

        std::vector<std::vector<CycNum>> echelon;
        auto insert_row = [&](const OPoly& p) {
            std::vector<CycNum> row(words.size(), CycNum::zero(cond_));
            for (const auto& [w, c] : p) row[index.at(w)] = c;
            for (const auto& e : echelon) {
                size_t pc = 0;
                while (e[pc].is_zero()) ++pc;
                if (row[pc].is_zero()) continue;
                CycNum f = row[pc];
                for (size_t j = 0; j < row.size(); ++j)
                    if (!e[j].is_zero()) row[j] -= f * e[j];
            }
            size_t pc = 0;
            while (pc < row.size() && row[pc].is_zero()) ++pc;
            if (pc == row.size()) return;
            CycNum inv = row[pc].inverse();
            for (auto& x : row)
                if (!x.is_zero()) x *= inv;
            echelon.push_back(std::move(row));
        };

        for (const auto& r : relations_) {
            if (r.empty()) continue;
            std::vector<int> dr = degree(r.begin()->first);
            std::vector<int> rest(theta_);
            bool fits = true;
            for (size_t s = 0; s < theta_; ++s) {
                rest[s] = deg[s] - dr[s];
                if (rest[s] < 0) fits = false;
            }
            if (!fits) continue;
            // all splits rest = d1 + d2, all word pairs
            std::vector<int> d1(theta_, 0);
            while (true) {
                std::vector<int> d2(theta_);
                for (size_t s = 0; s < theta_; ++s) d2[s] = rest[s] - d1[s];
                for (const auto& wl : words_of_degree(d1))
                    for (const auto& wr : words_of_degree(d2)) {
                        OPoly p;
                        for (const auto& [w, c] : r) {
                            OWord full = wl;
                            full.insert(full.end(), w.begin(), w.end());
                            full.insert(full.end(), wr.begin(), wr.end());
                            opoly_add(p, full, c);
                        }
                        insert_row(p);
                    }
                // odometer over d1 <= rest
                size_t s = theta_;
                bool carry = true;
                while (s > 0 && carry) {
                    --s;
                    if (++d1[s] <= rest[s]) carry = false;
                    else d1[s] = 0;
                }
                if (theta_ == 0 || carry) break;
            }
        }
        return rows_.emplace(deg, std::move(echelon)).first->second;
    }

    size_t quotient_dim(const std::vector<int>& deg) {
        return words_of_degree(deg).size() - ideal_rows(deg).size();
    }

    // p must be homogeneous; true when it reduces to zero against the ideal
    bool in_ideal(const OPoly& p) {
        if (p.empty()) return true;
        std::vector<int> deg = degree(p.begin()->first);
        const auto& words = words_of_degree(deg);
        std::map<OWord, size_t> index;
        for (size_t k = 0; k < words.size(); ++k) index[words[k]] = k;
        std::vector<CycNum> row(words.size(), CycNum::zero(cond_));
        for (const auto& [w, c] : p) {
            if (degree(w) != deg) return false;  // not homogeneous
            row[index.at(w)] = c;
        }
        for (const auto& e : ideal_rows(deg)) {
            size_t pc = 0;
            while (e[pc].is_zero()) ++pc;
            if (row[pc].is_zero()) continue;
            CycNum f = row[pc];
            for (size_t j = 0; j < row.size(); ++j)
                if (!e[j].is_zero()) row[j] -= f * e[j];
        }
        for (const auto& x : row)
            if (!x.is_zero()) return false;
        return true;
    }

private:
    void gen_words(const std::vector<int>& deg, OWord& cur, std::vector<OWord>& out) {
        bool done = true;
        for (size_t s = 0; s < theta_; ++s)
            if (deg[s] > 0) done = false;
        if (done) {
            out.push_back(cur);
            return;
        }
        for (size_t s = 0; s < theta_; ++s) {
            if (deg[s] == 0) continue;
            std::vector<int> rest = deg;
            --rest[s];
            cur.push_back(static_cast<int>(s));
            gen_words(rest, cur, out);
            cur.pop_back();
        }
    }

    phopf::CartanDatum d_;
    phopf::RootData roots_;
    long cond_;
    size_t theta_;
    std::vector<OPoly> relations_;
    std::map<std::vector<int>, std::vector<OWord>> words_;
    std::map<std::vector<int>, std::vector<std::vector<CycNum>>> rows_;
};

}  // namespace oracle
