#include "phopf/freepoly.hpp"

namespace phopf {

std::vector<int> word_degree(const Word& w, size_t theta) {
    std::vector<int> d(theta, 0);
    for (uint8_t a : w) ++d[a];
    return d;
}

FreePoly FreePoly::unit(long conductor) { return monomial(Word{}, CycNum::one(conductor)); }

FreePoly FreePoly::letter(uint8_t i, long conductor) { return monomial(Word{i}, CycNum::one(conductor)); }

FreePoly FreePoly::monomial(Word w, CycNum c) {
    FreePoly f;
    if (!c.is_zero()) f.t_.emplace(std::move(w), std::move(c));
    return f;
}

void FreePoly::add_term(const Word& w, const CycNum& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

FreePoly FreePoly::operator+(const FreePoly& o) const {
    FreePoly out = *this;
    for (const auto& [w, c] : o.t_) out.add_term(w, c);
    return out;
}

FreePoly FreePoly::operator-(const FreePoly& o) const {
    FreePoly out = *this;
    for (const auto& [w, c] : o.t_) out.add_term(w, -c);
    return out;
}

FreePoly FreePoly::operator*(const FreePoly& o) const {
    FreePoly out;
    for (const auto& [w1, c1] : t_)
        for (const auto& [w2, c2] : o.t_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            out.add_term(w, c1 * c2);
        }
    return out;
}

FreePoly FreePoly::scaled(const CycNum& c) const {
    FreePoly out;
    if (c.is_zero()) return out;
    for (const auto& [w, v] : t_) out.t_.emplace(w, v * c);
    return out;
}

FreePoly FreePoly::operator-() const {
    FreePoly out;
    for (const auto& [w, v] : t_) out.t_.emplace(w, -v);
    return out;
}

}  // namespace phopf
