#include "nilfit/linalg.hpp"

namespace nilfit {

namespace {

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<std::size_t> rref(Mat& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t pr = row;
        while (pr < m.size() && m[pr][col].is_zero()) ++pr;
        if (pr == m.size()) continue;
        std::swap(m[row], m[pr]);
        const FieldElement inv = m[row][col].inverse();
        for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            const FieldElement f = m[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Mat m) {
    if (m.empty()) return 0;
    return rref(m, m[0].size()).size();
}

std::vector<Vec> kernel_basis(Mat m, const Field& field, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    if (!m.empty()) pivots = rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t fc = 0; fc < ncols; ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(ncols, FieldElement::zero(field));
        v[fc] = FieldElement::one(field);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

Vec normalize_first_nonzero(Vec v) {
    for (const auto& c : v) {
        if (c.is_zero()) continue;
        const FieldElement inv = c.inverse();
        for (auto& x : v) x *= inv;
        return v;
    }
    throw InputError("cannot normalize the zero vector");
}

std::strong_ordering compare_vec(const Vec& a, const Vec& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    return a.size() <=> b.size();
}

}  // namespace nilfit
