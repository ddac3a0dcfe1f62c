#include "hecke/linear_solve.hpp"

#include <utility>

namespace hecke {

namespace {

struct Echelon {
    std::vector<std::vector<Rational>> rows;  // augmented with the rhs in the last column
    std::vector<int> pivots;                  // pivot column of each kept row
    bool consistent = true;
};

Echelon reduce(const std::vector<SparseRow>& eqs, const std::vector<Rational>* rhs, int ncols) {
    Echelon e;
    const auto width = static_cast<std::size_t>(ncols) + 1;
    std::vector<std::vector<Rational>> a;
    a.reserve(eqs.size());
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        std::vector<Rational> row(width);
        for (const auto& [j, v] : eqs[i]) row[static_cast<std::size_t>(j)] = v;
        if (rhs != nullptr) row.back() = (*rhs)[i];
        a.push_back(std::move(row));
    }
    std::size_t r = 0;
    for (int c = 0; c < ncols && r < a.size(); ++c) {
        const auto col = static_cast<std::size_t>(c);
        std::size_t p = r;
        while (p < a.size() && a[p][col].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[r], a[p]);
        const Rational inv = a[r][col].inverse();
        for (auto& v : a[r]) v *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][col].is_zero()) continue;
            const Rational f = a[i][col];
            for (std::size_t j = col; j < width; ++j) {
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
            }
        }
        e.pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < a.size(); ++i) {
        if (!a[i].back().is_zero()) e.consistent = false;
    }
    a.resize(r);
    e.rows = std::move(a);
    return e;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const std::vector<SparseRow>& rows, int ncols) {
    const Echelon e = reduce(rows, nullptr, ncols);
    std::vector<char> is_pivot(static_cast<std::size_t>(ncols), 0);
    for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Rational> x(static_cast<std::size_t>(ncols));
        x[static_cast<std::size_t>(f)] = Rational(1);
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            x[static_cast<std::size_t>(e.pivots[i])] = -e.rows[i][static_cast<std::size_t>(f)];
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve_linear(const std::vector<SparseRow>& rows,
                                                  const std::vector<Rational>& rhs, int ncols) {
    const Echelon e = reduce(rows, &rhs, ncols);
    if (!e.consistent) return std::nullopt;
    std::vector<Rational> x(static_cast<std::size_t>(ncols));
    for (std::size_t i = 0; i < e.rows.size(); ++i) x[static_cast<std::size_t>(e.pivots[i])] = e.rows[i].back();
    return x;
}

}  // namespace hecke
