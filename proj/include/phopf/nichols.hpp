#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>

#include "phopf/cartan.hpp"
#include "phopf/freepoly.hpp"

namespace phopf {

struct build_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RewriteRule {
    Word lead;      // monic leading word
    FreePoly rhs;   // lead rewrites to rhs; every rhs word is degree-lex smaller
};

using PbwVec = std::vector<std::pair<uint32_t, CycNum>>;

/// The braided part of u(D,0,0): the Nichols algebra B(V) presented by the
/// quantum Serre relations and the root-vector nilpotencies, realized as a
/// confluent rewriting system on words in x_1..x_theta.
///
/// The system is obtained by critical-pair completion of the defining
/// relations, truncated to the multidegree cone below
/// d_top = sum_k (N_k - 1) beta_k; every word outside the cone is zero in
/// the quotient. Completion must confirm dim = prod_k N_k and the PBW
/// property of the ordered root-vector monomials, otherwise construction
/// throws build_error.
class NicholsAlgebra {
public:
    NicholsAlgebra(const CartanDatum& d, const RootData& roots);

    size_t dim() const { return dim_; }
    size_t p() const { return roots_.p(); }
    long conductor() const { return conductor_; }
    const RootData& roots() const { return roots_; }

    /// PBW exponent vectors are indexed row-major (last exponent fastest).
    uint32_t uindex(const std::vector<int>& u) const;
    const std::vector<int>& exponents(uint32_t uidx) const { return exps_[uidx]; }
    const std::vector<int>& multidegree(uint32_t uidx) const { return mdeg_[uidx]; }

    /// Product of two PBW monomials in PBW coordinates; memoized.
    PbwVec product(uint32_t ui, uint32_t vi) const;

    /// Normal form of an arbitrary free polynomial, in PBW coordinates.
    PbwVec normal_form_pbw(const FreePoly& f) const;

    /// Free-algebra representative of the root vector y_k (iterated braided
    /// commutator along the splitting plan).
    const FreePoly& root_rep(size_t k) const { return root_rep_[k]; }

    /// Free-algebra representative of a PBW monomial.
    FreePoly pbw_rep(uint32_t uidx) const;

    const std::vector<RewriteRule>& rules() const { return rules_; }
    const std::vector<int>& top_degree() const { return d_top_; }

    /// Number of quotient dimensions per multidegree (for cross-checks).
    std::map<std::vector<int>, size_t> degree_dimensions() const;

private:
    using IrrVec = std::vector<std::pair<uint32_t, CycNum>>;  // over irreducible words

    bool in_cone(const std::vector<int>& d) const;
    FreePoly reduce(FreePoly f) const;
    void complete(std::vector<FreePoly> pending);
    void enumerate_irreducible();
    void build_pbw_basis();
    const IrrVec& word_nf(const Word& w) const;
    IrrVec poly_nf(const FreePoly& f) const;
    PbwVec irr_to_pbw(const IrrVec& v) const;

    CartanDatum datum_;
    RootData roots_;
    long conductor_;
    size_t theta_;
    std::vector<int> d_top_;
    size_t dim_ = 0;

    std::vector<RewriteRule> rules_;
    std::vector<FreePoly> root_rep_;

    std::vector<Word> irr_words_;                      // sorted deg-lex
    std::map<Word, uint32_t, DegLexLess> irr_index_;

    std::vector<std::vector<int>> exps_;
    std::vector<std::vector<int>> mdeg_;
    std::map<std::vector<int>, uint32_t> exp_index_;

    // PBW-coordinates change of basis: column u = word_nf(pbw_rep(u)),
    // held as a row-echelon solver
    std::vector<std::vector<CycNum>> solve_rows_;      // inverse of the PBW coordinate matrix

    mutable std::mutex memo_mtx_;
    mutable std::map<Word, IrrVec, DegLexLess> nf_memo_;
    mutable std::unordered_map<uint64_t, PbwVec> product_memo_;
};

}  // namespace phopf
