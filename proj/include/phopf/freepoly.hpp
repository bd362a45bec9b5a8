#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "phopf/cyclotomic.hpp"

namespace phopf {

/// Word in the free algebra on letters 0..theta-1.
using Word = std::vector<uint8_t>;

/// Degree-lexicographic order: by length first, then letterwise.
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

std::vector<int> word_degree(const Word& w, size_t theta);

/// Sparse polynomial in the free algebra with cyclotomic coefficients.
/// Terms are kept in degree-lex order with no explicit zeros.
class FreePoly {
public:
    using Map = std::map<Word, CycNum, DegLexLess>;

    FreePoly() = default;
    static FreePoly unit(long conductor);
    static FreePoly letter(uint8_t i, long conductor);
    static FreePoly monomial(Word w, CycNum c);

    bool is_zero() const { return t_.empty(); }
    const Map& terms() const { return t_; }
    size_t size() const { return t_.size(); }

    /// Largest term in degree-lex order; polynomial must be nonzero.
    const std::pair<const Word, CycNum>& leading() const { return *t_.rbegin(); }

    void add_term(const Word& w, const CycNum& c);

    FreePoly operator+(const FreePoly& o) const;
    FreePoly operator-(const FreePoly& o) const;
    FreePoly operator*(const FreePoly& o) const;  // concatenation product
    FreePoly scaled(const CycNum& c) const;
    FreePoly operator-() const;

private:
    Map t_;
};

}  // namespace phopf
