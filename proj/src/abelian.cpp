#include "phopf/abelian.hpp"

#include <numeric>
#include <sstream>

namespace phopf {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> invariants) : inv_(std::move(invariants)) {
    for (long m : inv_)
        if (m < 2) throw std::invalid_argument("invariant factors must be >= 2");
}

unsigned long long FiniteAbelianGroup::order() const {
    unsigned long long o = 1;
    for (long m : inv_) o *= static_cast<unsigned long long>(m);
    return o;
}

long FiniteAbelianGroup::exponent() const {
    long e = 1;
    for (long m : inv_) e = std::lcm(e, m);
    return e;
}

void FiniteAbelianGroup::check_size(const std::vector<long>& e, const char* what) const {
    if (e.size() != inv_.size())
        throw group_mismatch(std::string(what) + ": exponent vector has rank " + std::to_string(e.size()) +
                             ", group has rank " + std::to_string(inv_.size()));
}

GroupElement FiniteAbelianGroup::identity() const { return GroupElement{std::vector<long>(inv_.size(), 0)}; }

GroupElement FiniteAbelianGroup::element(std::vector<long> exps) const {
    check_size(exps, "element");
    for (size_t j = 0; j < exps.size(); ++j) exps[j] = ((exps[j] % inv_[j]) + inv_[j]) % inv_[j];
    return GroupElement{std::move(exps)};
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    check_size(a.e, "add");
    check_size(b.e, "add");
    std::vector<long> e(inv_.size());
    for (size_t j = 0; j < inv_.size(); ++j) e[j] = (a.e[j] + b.e[j]) % inv_[j];
    return GroupElement{std::move(e)};
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
    check_size(a.e, "neg");
    std::vector<long> e(inv_.size());
    for (size_t j = 0; j < inv_.size(); ++j) e[j] = (inv_[j] - a.e[j]) % inv_[j];
    return GroupElement{std::move(e)};
}

GroupElement FiniteAbelianGroup::mul_pow(const GroupElement& a, long k) const {
    check_size(a.e, "pow");
    std::vector<long> e(inv_.size());
    for (size_t j = 0; j < inv_.size(); ++j) {
        long v = (a.e[j] * (k % inv_[j])) % inv_[j];
        e[j] = (v + inv_[j]) % inv_[j];
    }
    return GroupElement{std::move(e)};
}

bool FiniteAbelianGroup::is_identity(const GroupElement& a) const {
    check_size(a.e, "is_identity");
    for (long v : a.e)
        if (v != 0) return false;
    return true;
}

long FiniteAbelianGroup::element_order(const GroupElement& a) const {
    check_size(a.e, "order");
    long o = 1;
    for (size_t j = 0; j < inv_.size(); ++j) {
        long g = std::gcd(a.e[j], inv_[j]);
        o = std::lcm(o, inv_[j] / g);
    }
    return o;
}

Character FiniteAbelianGroup::trivial_character() const {
    return Character{std::vector<long>(inv_.size(), 0)};
}

Character FiniteAbelianGroup::character(std::vector<long> exps) const {
    check_size(exps, "character");
    for (size_t j = 0; j < exps.size(); ++j) exps[j] = ((exps[j] % inv_[j]) + inv_[j]) % inv_[j];
    return Character{std::move(exps)};
}

Character FiniteAbelianGroup::add(const Character& a, const Character& b) const {
    check_size(a.e, "add");
    check_size(b.e, "add");
    std::vector<long> e(inv_.size());
    for (size_t j = 0; j < inv_.size(); ++j) e[j] = (a.e[j] + b.e[j]) % inv_[j];
    return Character{std::move(e)};
}

Character FiniteAbelianGroup::neg(const Character& a) const {
    check_size(a.e, "neg");
    std::vector<long> e(inv_.size());
    for (size_t j = 0; j < inv_.size(); ++j) e[j] = (inv_[j] - a.e[j]) % inv_[j];
    return Character{std::move(e)};
}

Character FiniteAbelianGroup::mul_pow(const Character& a, long k) const {
    check_size(a.e, "pow");
    std::vector<long> e(inv_.size());
    for (size_t j = 0; j < inv_.size(); ++j) {
        long v = (a.e[j] * (k % inv_[j])) % inv_[j];
        e[j] = (v + inv_[j]) % inv_[j];
    }
    return Character{std::move(e)};
}

bool FiniteAbelianGroup::is_trivial(const Character& a) const {
    check_size(a.e, "is_trivial");
    for (long v : a.e)
        if (v != 0) return false;
    return true;
}

long FiniteAbelianGroup::pair_exponent(const Character& chi, const GroupElement& g) const {
    check_size(chi.e, "pair");
    check_size(g.e, "pair");
    long E = exponent();
    long acc = 0;
    for (size_t j = 0; j < inv_.size(); ++j) {
        long term = ((chi.e[j] * g.e[j]) % inv_[j]) * (E / inv_[j]) % E;
        acc = (acc + term) % E;
    }
    return acc;
}

CycNum FiniteAbelianGroup::pair(const Character& chi, const GroupElement& g, long conductor) const {
    long E = exponent();
    if (conductor == 0) conductor = E;
    if (conductor % E != 0)
        throw conductor_mismatch("pairing conductor must be a multiple of the group exponent");
    return CycNum::zeta(conductor, pair_exponent(chi, g) * (conductor / E));
}

Character FiniteAbelianGroup::hat(const GroupElement& g) const {
    check_size(g.e, "hat");
    return Character{g.e};
}

std::vector<GroupElement> FiniteAbelianGroup::enumerate(unsigned long long cap) const {
    if (order() > cap) throw enumeration_cap_exceeded("group order exceeds enumeration cap");
    std::vector<GroupElement> out;
    out.reserve(static_cast<size_t>(order()));
    std::vector<long> cur(inv_.size(), 0);
    while (true) {
        out.push_back(GroupElement{cur});
        size_t j = inv_.size();
        while (j > 0) {
            --j;
            if (++cur[j] < inv_[j]) break;
            cur[j] = 0;
            if (j == 0) return out;
        }
        if (inv_.empty()) return out;
    }
}

std::vector<Character> FiniteAbelianGroup::enumerate_characters(unsigned long long cap) const {
    auto elems = enumerate(cap);
    std::vector<Character> out;
    out.reserve(elems.size());
    for (auto& g : elems) out.push_back(Character{std::move(g.e)});
    return out;
}

size_t FiniteAbelianGroup::index_of(const GroupElement& g) const {
    check_size(g.e, "index_of");
    size_t idx = 0;
    for (size_t j = 0; j < inv_.size(); ++j) idx = idx * static_cast<size_t>(inv_[j]) + static_cast<size_t>(g.e[j]);
    return idx;
}

GroupElement FiniteAbelianGroup::element_at(size_t idx) const {
    std::vector<long> e(inv_.size(), 0);
    for (size_t j = inv_.size(); j > 0; --j) {
        e[j - 1] = static_cast<long>(idx % static_cast<unsigned long long>(inv_[j - 1]));
        idx /= static_cast<unsigned long long>(inv_[j - 1]);
    }
    return GroupElement{std::move(e)};
}

std::string FiniteAbelianGroup::str() const {
    std::ostringstream os;
    if (inv_.empty()) return "trivial";
    for (size_t j = 0; j < inv_.size(); ++j) {
        if (j) os << " x ";
        os << "Z" << inv_[j];
    }
    return os.str();
}

}  // namespace phopf
