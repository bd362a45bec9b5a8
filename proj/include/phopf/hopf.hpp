#pragma once

#include <unordered_map>

#include "phopf/algebra.hpp"
#include "phopf/linalg.hpp"

namespace phopf {

/// The dual Hopf algebra A* on the dual basis of A's PBW basis:
/// multiplication is the transpose of Delta_A, comultiplication the
/// transpose of mult_A, antipode the transpose of S_A. Requires fully
/// materializable tables (dim <= table threshold).
class DualTables final : public HopfTables {
public:
    static std::shared_ptr<const DualTables> build(std::shared_ptr<const AlgebraTables> base);

    const AlgebraTables& base() const { return *base_; }
    const CartanDatum& dual_datum() const { return dual_datum_; }

    Sparse mult_basis(uint32_t i, uint32_t j) const override;
    const std::vector<Trip>& comult_basis(uint32_t i) const override;
    const CycNum& counit_basis(uint32_t i) const override;
    const Sparse& antipode_basis(uint32_t i) const override;
    const Sparse& antipode_inv_basis(uint32_t i) const override;
    std::string basis_label(uint32_t i) const override;

    /// Pairing <f, a> of a functional with an element of A.
    CycNum eval(const AlgElement& f, const AlgElement& a) const;
    CycNum eval_basis(const AlgElement& f, uint32_t a_idx) const;

    /// The functional xi_i: indicator of the basis words x_i g.
    AlgElement xi(size_t i) const;
    /// A character of G extended to A* by zero outside the group span.
    AlgElement extended_character(const Character& chi) const;
    /// Dual root vector Y_k (iterated commutator of the xi's).
    const AlgElement& dual_root_vector(size_t k) const { return yroot_[k]; }
    /// PBW element Y_u chi of the dual structure theorem.
    AlgElement dual_pbw(const std::vector<int>& u, const Character& chi) const;
    /// Structure-theorem basis as columns, indexed like u(dual datum).
    const std::vector<Sparse>& dual_pbw_columns() const { return pbw_cols_; }
    bool dual_pbw_invertible() const { return pbw_invertible_; }

private:
    DualTables() = default;

    std::shared_ptr<const AlgebraTables> base_;
    CartanDatum dual_datum_;
    RootData dual_roots_;
    std::unordered_map<uint64_t, Sparse> mult_;
    std::vector<std::vector<Trip>> comult_;
    std::vector<CycNum> counit_;
    std::vector<Sparse> antipode_, antipode_inv_;
    std::vector<AlgElement> yroot_;
    std::vector<AlgElement> ypbw_;       // Y_u per PBW exponent index
    std::vector<Sparse> pbw_cols_;
    bool pbw_invertible_ = false;
    static const std::vector<Trip> empty_;
};

/// The four dual-relation families, checked exactly on the tables; the
/// comultiplication of xi_i is additionally verified by exhaustive pairing
/// against products of basis elements when dim <= pairing_cap.
CheckReport verify_dual_relations(const DualTables& dual, size_t pairing_cap = 300);

/// Exact grouplike search over the candidate supports, with verification.
struct GrouplikeReport {
    std::vector<NamedElement> found;
    CheckReport checks;
};
GrouplikeReport find_grouplikes(const HopfTables& t);

/// Certificate that the verified candidate sets are all of G(A) and G(A*):
/// nilpotency of the skew-primitive generators plus generation facts reduce
/// any algebra character to a character of the group frame.
CheckReport grouplike_completeness(const AlgebraTables& a, const DualTables& dual);

/// Integrals of A and A*, solved from the defining equations and compared
/// against the closed formulas; distinguished grouplikes are solved, with
/// both printed sign variants reported.
struct IntegralReport {
    AlgElement t_left, t_right;      // in A
    AlgElement T_left, T_right;      // in A*
    size_t left_space_dim = 0, right_space_dim = 0;
    size_t dual_left_space_dim = 0, dual_right_space_dim = 0;
    Character gamma_solved;          // distinguished grouplike of A*
    GroupElement g_dist_solved;      // distinguished grouplike of A
    bool gamma_matches_minus_variant = false;  // prod chi_beta^{-(N-1)}
    bool gamma_matches_plus_variant = false;   // prod chi_beta^{+(N-1)}
    bool g_dist_matches_formula = false;       // prod g_beta^{N-1}
    CheckReport checks;
};
IntegralReport integrals(const AlgebraTables& a, const DualTables& dual, size_t random_checks = 500,
                         uint64_t seed = 0x1e7e6);

/// Coinvariant projection p (kill every PBW part), inclusion j, and
/// nu(a) = a_1 j p S(a_2).
AlgElement biproduct_projection(const AlgebraTables& a, const AlgElement& x);
AlgElement biproduct_nu(const AlgebraTables& a, const AlgElement& x);
CheckReport verify_biproduct_maps(const AlgebraTables& a, size_t samples = 200, uint64_t seed = 0xb1);

/// The dual structure theorem: u(dual datum) -> A*, PBW basis onto the
/// Y_u chi basis, checked as an algebra isomorphism.
CheckReport verify_dual_structure(const DualTables& dual, const AlgebraTables& u_dual,
                                  size_t random_pairs = 300, uint64_t seed = 0xd0a1);

}  // namespace phopf
