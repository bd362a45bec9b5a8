#pragma once

#include <memory>
#include <optional>
#include <tuple>
#include <variant>

#include "phopf/nichols.hpp"
#include "phopf/report.hpp"

namespace phopf {

using Sparse = std::map<uint32_t, CycNum>;
using Tensor = std::map<uint64_t, CycNum>;    // key = i*dim + j
using Tensor3 = std::map<uint64_t, CycNum>;   // key = (i*dim + j)*dim + k
using Trip = std::tuple<uint32_t, uint32_t, CycNum>;

void sparse_axpy(Sparse& acc, const Sparse& v, const CycNum& c);
void tensor_axpy(Tensor& acc, const Tensor& v, const CycNum& c);

class HopfTables;

/// Sparse element of a based Hopf algebra; carries its owner so that
/// cross-table operations fail loudly.
struct AlgElement {
    const HopfTables* owner = nullptr;
    Sparse v;

    bool is_zero() const { return v.empty(); }
    bool operator==(const AlgElement& o) const { return owner == o.owner && v == o.v; }
};

struct NamedElement {
    std::string name;
    AlgElement elt;
};

struct table_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact structure constants of a finite-dimensional Hopf algebra on a
/// fixed basis, together with element-level arithmetic. Concrete tables
/// (the PBW algebra, its dual) subclass this.
class HopfTables {
public:
    virtual ~HopfTables() = default;

    long conductor() const { return conductor_; }
    size_t dim() const { return dim_; }
    const AlgElement& one() const { return one_; }

    virtual Sparse mult_basis(uint32_t i, uint32_t j) const = 0;
    virtual const std::vector<Trip>& comult_basis(uint32_t i) const = 0;
    virtual const CycNum& counit_basis(uint32_t i) const = 0;
    virtual const Sparse& antipode_basis(uint32_t i) const = 0;
    virtual const Sparse& antipode_inv_basis(uint32_t i) const = 0;
    virtual std::string basis_label(uint32_t i) const = 0;

    AlgElement element(Sparse v) const;
    AlgElement basis_element(uint32_t i) const;
    AlgElement zero() const { return element({}); }
    AlgElement scalar(const CycNum& c) const;

    AlgElement add(const AlgElement& a, const AlgElement& b) const;
    AlgElement sub(const AlgElement& a, const AlgElement& b) const;
    AlgElement scale(const AlgElement& a, const CycNum& c) const;
    AlgElement multiply(const AlgElement& a, const AlgElement& b) const;
    AlgElement power(const AlgElement& a, long n) const;
    Tensor comult(const AlgElement& a) const;
    CycNum counit(const AlgElement& a) const;
    AlgElement antipode(const AlgElement& a) const;
    AlgElement antipode_inv(const AlgElement& a) const;

    Tensor tensor_mult(const Tensor& a, const Tensor& b) const;
    Tensor tensor_of(const AlgElement& a, const AlgElement& b) const;

    /// Hopf adjoint ad(x)(y) = sum x_1 y S(x_2).
    AlgElement hopf_ad(const AlgElement& x, const AlgElement& y) const;

    void check_owner(const AlgElement& a) const;

    const std::vector<NamedElement>& group_generators() const { return group_gens_; }
    const std::vector<NamedElement>& primitive_generators() const { return prim_gens_; }
    /// All generators, group-like ones first.
    std::vector<NamedElement> generators() const;
    const std::vector<NamedElement>& grouplike_elements() const { return grouplikes_; }

    std::string describe(const AlgElement& a) const;

protected:
    long conductor_ = 1;
    size_t dim_ = 0;
    AlgElement one_;
    std::vector<NamedElement> group_gens_, prim_gens_, grouplikes_;
};

struct AlgebraOptions {
    /// Dense comultiplication/antipode tables are materialized at or below
    /// this dimension; above it they are computed on demand and memoized.
    size_t table_threshold = 1024;
    unsigned long long enumeration_cap = 1000000;
};

enum class CheckLevel { generators, full_basis };

/// A = u(D,0,0) on the PBW basis {y_1^{u_1}..y_p^{u_p} g}, built by the
/// rewriting engine. Basis index = uindex * |G| + gindex, both row-major.
class AlgebraTables final : public HopfTables {
public:
    static std::shared_ptr<const AlgebraTables> build(const CartanDatum& d, AlgebraOptions opts = {});

    const CartanDatum& datum() const { return datum_; }
    const RootData& root_data() const { return roots_; }
    const NicholsAlgebra& nichols() const { return *nichols_; }
    const FiniteAbelianGroup& group() const { return datum_.group; }

    uint32_t index(uint32_t uidx, uint32_t gidx) const;
    std::pair<uint32_t, uint32_t> unpack(uint32_t idx) const;
    uint32_t group_size() const { return gsize_; }

    Sparse mult_basis(uint32_t i, uint32_t j) const override;
    const std::vector<Trip>& comult_basis(uint32_t i) const override;
    const CycNum& counit_basis(uint32_t i) const override;
    const Sparse& antipode_basis(uint32_t i) const override;
    const Sparse& antipode_inv_basis(uint32_t i) const override;
    std::string basis_label(uint32_t i) const override;

    AlgElement group_element(const GroupElement& g) const;
    AlgElement generator_x(size_t i) const;
    /// Root vector y_k as a basis word.
    AlgElement root_vector(size_t k) const;
    AlgElement basis_word(const std::vector<int>& u, const GroupElement& g) const;

    /// Product of a mixed word in the generators {group elements, x_i},
    /// i.e. the engine's normal form of that free word.
    AlgElement word_element(const std::vector<std::variant<GroupElement, size_t>>& w) const;

    /// Z^theta-degree of a basis index (of its PBW part).
    const std::vector<int>& zdegree(uint32_t idx) const;
    /// chi_u(g) for the PBW part of index u and group index g.
    CycNum chi_u_of(uint32_t uidx, uint32_t gidx) const;
    const Character& chi_u(uint32_t uidx) const { return chi_u_[uidx]; }

    /// Braided commutator x y - (g_x . y) x, where g_x is read off the
    /// Z^theta-degree of x; x must be homogeneous.
    AlgElement braided_ad(const AlgElement& x, const AlgElement& y) const;
    AlgElement conjugate_by_group(const GroupElement& g, const AlgElement& a) const;

private:
    AlgebraTables() = default;
    CycNum zeta_pow(long e) const;

    CartanDatum datum_;
    RootData roots_;
    std::shared_ptr<const NicholsAlgebra> nichols_;
    AlgebraOptions opts_;
    uint32_t gsize_ = 1;
    uint32_t bsize_ = 1;
    std::vector<long> inv_;
    std::vector<Character> chi_u_;
    std::vector<CycNum> zeta_pow_;
    long exponent_ = 1;

    mutable std::mutex cache_mtx_;
    mutable std::vector<std::optional<std::vector<Trip>>> comult_cache_;
    mutable std::vector<std::optional<Sparse>> antipode_cache_, antipode_inv_cache_;
    mutable std::vector<std::optional<Tensor>> pbw_comult_cache_;   // Delta(y_u)
    mutable std::vector<std::optional<Sparse>> pbw_antipode_cache_, pbw_antipode_inv_cache_;
    std::vector<CycNum> counit_;

    const Tensor& pbw_comult(uint32_t uidx) const;
    const Sparse& pbw_antipode(uint32_t uidx, bool inverse) const;
    Tensor root_comult(size_t k) const;
    Sparse root_antipode(size_t k, bool inverse) const;

    uint32_t gadd(uint32_t a, uint32_t b) const;
    uint32_t gneg(uint32_t a) const;
};

/// Hopf-axiom and defining-relation verification. At CheckLevel::generators
/// the multiplicative identities are checked on generator x basis pairs
/// plus seeded random pairs, which determines them everywhere; full_basis
/// checks every pair.
CheckReport verify_build(const AlgebraTables& t, CheckLevel level, size_t random_pairs = 2000,
                         uint64_t seed = 0x5eed);

}  // namespace phopf
