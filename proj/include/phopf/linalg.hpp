#pragma once

#include <optional>

#include "phopf/algebra.hpp"

namespace phopf {

/// Exact dense LU over Q(zeta_n), enough for invertibility certificates and
/// small solves.
class DenseSolver {
public:
    DenseSolver(size_t n, long conductor);
    void set_column(size_t j, const Sparse& col);
    /// Row-reduce; returns the rank.
    size_t factor();
    bool invertible() const { return factored_ && rank_ == n_; }
    /// Solve M x = b for the original column matrix M; empty when singular
    /// or inconsistent.
    std::optional<std::vector<CycNum>> solve(const Sparse& rhs) const;

private:
    size_t n_;
    long conductor_;
    bool factored_ = false;
    size_t rank_ = 0;
    std::vector<std::vector<CycNum>> m_;   // reduced [M | T] with T tracking row ops
};

/// Kernel of a sparse row system over Q(zeta_n): all x with row . x = 0.
/// Returns a basis of the kernel as dense vectors.
std::vector<std::vector<CycNum>> kernel_basis(const std::vector<Sparse>& rows, size_t ncols,
                                              long conductor);

}  // namespace phopf
