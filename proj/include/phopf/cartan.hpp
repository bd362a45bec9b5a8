#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phopf/abelian.hpp"

namespace phopf {

/// Raised by validate_datum and friends; carries one message per violated
/// invariant, each with the offending indices and both sides of the failed
/// identity.
struct datum_error : std::runtime_error {
    explicit datum_error(std::vector<std::string> issues_);
    std::vector<std::string> issues;
};

/// Generalized Cartan matrix restricted to the finite types this engine
/// supports (components A1, A2, B2, G2, A3).
class CartanMatrix {
public:
    CartanMatrix() = default;
    explicit CartanMatrix(std::vector<std::vector<int>> entries);

    size_t rank() const { return a_.size(); }
    int operator()(size_t i, size_t j) const { return a_[i][j]; }
    const std::vector<std::vector<int>>& entries() const { return a_; }

    /// Checks shape invariants and finite-type classification; returns the
    /// list of issues instead of throwing.
    std::vector<std::string> validate() const;

    /// Connected components as index lists (sorted), after validate().
    std::vector<std::vector<size_t>> components() const;
    /// Per-component type label like "A1", "B2"; parallel to components().
    std::vector<std::string> component_types() const;

    bool adjacent(size_t i, size_t j) const { return i != j && a_[i][j] != 0; }

private:
    std::vector<std::vector<int>> a_;
};

/// Positive roots in simple-root coordinates, listed in a convex order
/// coming from a reduced word of the longest Weyl element; plus the data a
/// PBW construction needs: heights, simple positions and a splitting of
/// each non-simple root into two earlier-known roots.
struct RootSystem {
    CartanMatrix cartan;
    size_t p = 0;
    std::vector<std::vector<int>> roots;       // beta_k, convex order
    std::vector<int> height;                   // ht(beta_k)
    std::vector<long> reduced_word;            // i_1 ... i_p (0-based letters)
    std::vector<long> simple_position;         // m_i with beta_{m_i} = alpha_i
    std::vector<std::pair<long, long>> split;  // (k1,k2) per root, (-1,-1) for simples
    std::vector<size_t> component_of;          // component index per root

    std::vector<std::vector<size_t>> node_components;  // simple-node components

    /// sum over the component of i of a_{is} c_{js}; equals 2 for every
    /// finite type (the reflection identity behind the ribbon theorem).
    long rho_identity_check(size_t i) const;
};

RootSystem positive_roots(const CartanMatrix& cartan);

/// The input tuple (G, (g_i), (chi_i), (a_ij)); linking and root-vector
/// parameters must be absent or zero.
struct CartanDatum {
    FiniteAbelianGroup group;
    std::vector<GroupElement> g;
    std::vector<Character> chi;
    CartanMatrix cartan;
    std::vector<std::vector<mpq_class>> linking;     // lambda, validated zero
    std::vector<mpq_class> root_params;              // mu, validated zero

    size_t theta() const { return g.size(); }
    /// Conductor every scalar of the session lives at.
    long ambient_conductor() const;

    CycNum q_ii(size_t i) const { return group.pair(chi[i], g[i], ambient_conductor()); }
    CycNum chi_of(size_t i, const GroupElement& h) const {
        return group.pair(chi[i], h, ambient_conductor());
    }
};

/// Full per-root datum attached to a validated CartanDatum.
struct RootData {
    RootSystem sys;
    std::vector<long> N;                 // N_{beta_k}
    std::vector<GroupElement> g_root;    // g_{beta_k}
    std::vector<Character> chi_root;     // chi_{beta_k}

    size_t p() const { return sys.p; }
    unsigned long long pbw_count() const;
};

CartanDatum make_datum(FiniteAbelianGroup group, std::vector<GroupElement> g, std::vector<Character> chi,
                       CartanMatrix cartan);

/// Verifies every datum invariant exactly; throws datum_error listing all
/// violations. Rank-1 components are exempt from the odd-order rule, which
/// admits the even Taft algebras; multi-node components enforce it, and G2
/// components additionally need order prime to 3.
void validate_datum(const CartanDatum& d);

RootData attach_roots(const CartanDatum& d);

/// The dual datum over the character group: grouplikes chi_i, characters
/// hat g_i, same Cartan matrix.
CartanDatum dual_datum(const CartanDatum& d);

struct DoubleDatum {
    CartanDatum datum;                       // over G x G^
    std::vector<std::vector<mpq_class>> linking;  // lambda_{i,theta+i} = 1
};

/// The 2*theta datum over G x G^ with two diagonal copies of the Cartan
/// matrix, plus its linking matrix.
DoubleDatum double_datum(const CartanDatum& d);

/// Datum built from the Euler form of the Lie algebra with Cartan matrix
/// `cartan` and symmetrizers d_i, over G = (Z_N)^theta, with
/// chi_i(g_j) = r^{<i,j>} s^{-<j,i>} for r = zeta_N^{r_exp}, s = zeta_N^{s_exp}.
CartanDatum two_param_datum(const CartanMatrix& cartan, const std::vector<int>& d_i, long N, long r_exp,
                            long s_exp);

/// Symmetrizing integers for a finite-type Cartan matrix.
std::vector<int> symmetrizers(const CartanMatrix& cartan);

}  // namespace phopf
