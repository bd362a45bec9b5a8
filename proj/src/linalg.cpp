#include "phopf/linalg.hpp"

namespace phopf {

DenseSolver::DenseSolver(size_t n, long conductor) : n_(n), conductor_(conductor) {
    m_.assign(n, std::vector<CycNum>(2 * n, CycNum::zero(conductor)));
    for (size_t i = 0; i < n; ++i) m_[i][n + i] = CycNum::one(conductor);
}

void DenseSolver::set_column(size_t j, const Sparse& col) {
    for (const auto& [r, c] : col) m_[r][j] = c;
}

size_t DenseSolver::factor() {
    rank_ = 0;
    for (size_t col = 0; col < n_ && rank_ < n_; ++col) {
        size_t sel = rank_;
        while (sel < n_ && m_[sel][col].is_zero()) ++sel;
        if (sel == n_) continue;
        std::swap(m_[sel], m_[rank_]);
        CycNum inv = m_[rank_][col].inverse();
        for (size_t j = 0; j < 2 * n_; ++j)
            if (!m_[rank_][j].is_zero()) m_[rank_][j] *= inv;
        for (size_t r = 0; r < n_; ++r) {
            if (r == rank_ || m_[r][col].is_zero()) continue;
            CycNum f = m_[r][col];
            for (size_t j = 0; j < 2 * n_; ++j)
                if (!m_[rank_][j].is_zero()) m_[r][j] -= f * m_[rank_][j];
        }
        ++rank_;
    }
    factored_ = true;
    return rank_;
}

std::optional<std::vector<CycNum>> DenseSolver::solve(const Sparse& rhs) const {
    if (!factored_ || rank_ != n_) return std::nullopt;
    // after full reduction the left block is a permuted identity: row r has
    // pivot at column r (columns were processed in order, rank == n)
    std::vector<CycNum> b(n_, CycNum::zero(conductor_));
    for (const auto& [r, c] : rhs) b[r] = c;
    std::vector<CycNum> x(n_, CycNum::zero(conductor_));
    for (size_t r = 0; r < n_; ++r) {
        CycNum acc = CycNum::zero(conductor_);
        for (size_t j = 0; j < n_; ++j)
            if (!m_[r][n_ + j].is_zero() && !b[j].is_zero()) acc += m_[r][n_ + j] * b[j];
        x[r] = acc;
    }
    return x;
}

std::vector<std::vector<CycNum>> kernel_basis(const std::vector<Sparse>& rows, size_t ncols,
                                              long conductor) {
    std::vector<std::vector<CycNum>> echelon;
    std::vector<long> pivot_col;
    for (const auto& sparse_row : rows) {
        std::vector<CycNum> row(ncols, CycNum::zero(conductor));
        for (const auto& [j, c] : sparse_row) row[j] = c;
        for (size_t k = 0; k < echelon.size(); ++k) {
            size_t pc = static_cast<size_t>(pivot_col[k]);
            if (row[pc].is_zero()) continue;
            CycNum f = row[pc];
            for (size_t j = 0; j < ncols; ++j)
                if (!echelon[k][j].is_zero()) row[j] -= f * echelon[k][j];
        }
        long pc = -1;
        for (size_t j = 0; j < ncols; ++j)
            if (!row[j].is_zero()) {
                pc = static_cast<long>(j);
                break;
            }
        if (pc < 0) continue;
        CycNum inv = row[static_cast<size_t>(pc)].inverse();
        for (size_t j = 0; j < ncols; ++j)
            if (!row[j].is_zero()) row[j] *= inv;
        // keep the echelon reduced
        for (size_t k = 0; k < echelon.size(); ++k) {
            if (echelon[k][static_cast<size_t>(pc)].is_zero()) continue;
            CycNum f = echelon[k][static_cast<size_t>(pc)];
            for (size_t j = 0; j < ncols; ++j)
                if (!row[j].is_zero()) echelon[k][j] -= f * row[j];
        }
        echelon.push_back(std::move(row));
        pivot_col.push_back(pc);
    }
    std::vector<bool> is_pivot(ncols, false);
    for (long pc : pivot_col) is_pivot[static_cast<size_t>(pc)] = true;
    std::vector<std::vector<CycNum>> kernel;
    for (size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<CycNum> v(ncols, CycNum::zero(conductor));
        v[f] = CycNum::one(conductor);
        for (size_t k = 0; k < echelon.size(); ++k)
            v[static_cast<size_t>(pivot_col[k])] = -echelon[k][f];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace phopf
