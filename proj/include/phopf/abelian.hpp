#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "phopf/cyclotomic.hpp"

namespace phopf {

struct group_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct enumeration_cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of a finite abelian group in invariant-factor coordinates,
/// exponents reduced componentwise.
struct GroupElement {
    std::vector<long> e;
    bool operator==(const GroupElement& o) const { return e == o.e; }
    bool operator!=(const GroupElement& o) const { return e != o.e; }
    bool operator<(const GroupElement& o) const { return e < o.e; }
};

/// Character of the same group, itself stored as an exponent vector over
/// the same invariants: chi(j-th generator) = zeta_{m_j}^{c_j}. Products of
/// characters add exponents, so Character and "element of the dual group"
/// are one type.
struct Character {
    std::vector<long> e;
    bool operator==(const Character& o) const { return e == o.e; }
    bool operator!=(const Character& o) const { return e != o.e; }
    bool operator<(const Character& o) const { return e < o.e; }
};

/// Z_{m_1} x ... x Z_{m_r} with all m_j >= 2; the trivial group is the
/// empty list.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<long> invariants);

    const std::vector<long>& invariants() const { return inv_; }
    size_t rank() const { return inv_.size(); }
    unsigned long long order() const;
    long exponent() const;

    GroupElement identity() const;
    GroupElement element(std::vector<long> exps) const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement mul_pow(const GroupElement& a, long k) const;
    bool is_identity(const GroupElement& a) const;
    long element_order(const GroupElement& a) const;

    Character trivial_character() const;
    Character character(std::vector<long> exps) const;
    Character add(const Character& a, const Character& b) const;
    Character neg(const Character& a) const;
    Character mul_pow(const Character& a, long k) const;
    bool is_trivial(const Character& a) const;

    /// Exponent k with chi(g) = zeta_E^k, E = exponent(); the cheap exact
    /// form of the pairing.
    long pair_exponent(const Character& chi, const GroupElement& g) const;
    /// chi(g) as a cyclotomic number at the given conductor (default: the
    /// group exponent). The conductor must be a multiple of the exponent.
    CycNum pair(const Character& chi, const GroupElement& g, long conductor = 0) const;

    /// The canonical character of the dual group attached to g, sending
    /// chi to chi(g). Under the self-dual coordinates this is the same
    /// exponent vector.
    Character hat(const GroupElement& g) const;

    std::vector<GroupElement> enumerate(unsigned long long cap = 1000000) const;
    std::vector<Character> enumerate_characters(unsigned long long cap = 1000000) const;

    /// Row-major index of an element in enumerate() order.
    size_t index_of(const GroupElement& g) const;
    GroupElement element_at(size_t idx) const;

    bool operator==(const FiniteAbelianGroup& o) const { return inv_ == o.inv_; }

    std::string str() const;

private:
    void check_size(const std::vector<long>& e, const char* what) const;
    std::vector<long> inv_;
};

}  // namespace phopf
