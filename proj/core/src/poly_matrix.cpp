#include "hecke/poly_matrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

const LaurentPoly kZero;

std::vector<int> strides_of(const Layout& layout) {
    std::vector<int> s(layout.size(), 1);
    for (int f = static_cast<int>(layout.size()) - 2; f >= 0; --f) {
        s[static_cast<std::size_t>(f)] = s[static_cast<std::size_t>(f) + 1] * layout[static_cast<std::size_t>(f) + 1];
    }
    return s;
}

void sort_row(std::vector<PolyMatrix::Entry>& row) {
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.col < y.col; });
}

void require_same_dim(const PolyMatrix& a, const PolyMatrix& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a.dim()) + " and " +
                                std::to_string(b.dim()));
    }
}

}  // namespace

int layout_dim(const Layout& layout) {
    return std::accumulate(layout.begin(), layout.end(), 1, std::multiplies<>());
}

PolyMatrix::PolyMatrix(Layout layout) : layout_(std::move(layout)) {
    for (int d : layout_) {
        if (d <= 0) throw DimensionMismatch("layout factors must be positive");
    }
    rows_.resize(static_cast<std::size_t>(layout_dim(layout_)));
}

PolyMatrix PolyMatrix::identity(Layout layout, const Rational& scale) {
    PolyMatrix m(std::move(layout));
    if (scale.is_zero()) return m;
    for (int i = 0; i < m.dim(); ++i) m.rows_[static_cast<std::size_t>(i)].push_back({i, LaurentPoly(scale)});
    return m;
}

PolyMatrix PolyMatrix::unit(Layout layout, int row, int col, const LaurentPoly& value) {
    PolyMatrix m(std::move(layout));
    m.set(row, col, value);
    return m;
}

PolyMatrix PolyMatrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    PolyMatrix m(Layout{static_cast<int>(rows.size())});
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m.dim()) throw DimensionMismatch("from_rows: matrix is not square");
        int c = 0;
        for (const auto& v : row) m.set(r, c++, LaurentPoly(v));
        ++r;
    }
    return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<Rational>& diag) {
    PolyMatrix m(Layout{static_cast<int>(diag.size())});
    for (int i = 0; i < m.dim(); ++i) m.set(i, i, LaurentPoly(diag[static_cast<std::size_t>(i)]));
    return m;
}

const LaurentPoly& PolyMatrix::at(int r, int c) const {
    const auto& row = rows_.at(static_cast<std::size_t>(r));
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, int col) { return e.col < col; });
    return (it != row.end() && it->col == c) ? it->value : kZero;
}

std::size_t PolyMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& row : rows_) n += row.size();
    return n;
}

void PolyMatrix::set(int r, int c, LaurentPoly value) {
    if (r < 0 || c < 0 || r >= dim() || c >= dim()) throw IndexOutOfRange("matrix index out of range");
    auto& row = rows_[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, int col) { return e.col < col; });
    const bool present = it != row.end() && it->col == c;
    if (value.is_zero()) {
        if (present) row.erase(it);
    } else if (present) {
        it->value = std::move(value);
    } else {
        row.insert(it, Entry{c, std::move(value)});
    }
}

void PolyMatrix::add_to(int r, int c, const LaurentPoly& value) { set(r, c, at(r, c) + value); }

PolyMatrix PolyMatrix::relabeled(Layout layout) const {
    if (layout_dim(layout) != dim()) throw DimensionMismatch("relabeled: layout product differs from dimension");
    PolyMatrix m = *this;
    m.layout_ = std::move(layout);
    return m;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix m(layout_);
    for (int r = 0; r < dim(); ++r) {
        for (const auto& e : rows_[static_cast<std::size_t>(r)]) m.rows_[static_cast<std::size_t>(e.col)].push_back({r, e.value});
    }
    return m;
}

PolyMatrix PolyMatrix::partial_transpose(int factor) const {
    if (factor < 0 || factor >= static_cast<int>(layout_.size())) {
        throw DimensionMismatch("partial_transpose: factor " + std::to_string(factor) + " out of range");
    }
    const auto strides = strides_of(layout_);
    const int s = strides[static_cast<std::size_t>(factor)];
    const int d = layout_[static_cast<std::size_t>(factor)];
    PolyMatrix m(layout_);
    for (int r = 0; r < dim(); ++r) {
        const int dr = (r / s) % d;
        for (const auto& e : rows_[static_cast<std::size_t>(r)]) {
            const int dc = (e.col / s) % d;
            const int nr = r + (dc - dr) * s;
            const int nc = e.col + (dr - dc) * s;
            m.rows_[static_cast<std::size_t>(nr)].push_back({nc, e.value});
        }
    }
    for (auto& row : m.rows_) sort_row(row);
    return m;
}

PolyMatrix PolyMatrix::shifted(int k) const {
    PolyMatrix m = *this;
    for (auto& row : m.rows_) {
        for (auto& e : row) e.value = e.value.shifted(k);
    }
    return m;
}

PolyMatrix PolyMatrix::substituted(const Rational& c, int k) const {
    PolyMatrix m = *this;
    for (auto& row : m.rows_) {
        for (auto& e : row) e.value = e.value.substituted(c, k);
        std::erase_if(row, [](const Entry& e) { return e.value.is_zero(); });
    }
    return m;
}

PolyMatrix PolyMatrix::evaluated(const Rational& x) const {
    PolyMatrix m(layout_);
    for (int r = 0; r < dim(); ++r) {
        for (const auto& e : rows_[static_cast<std::size_t>(r)]) {
            Rational v = e.value.evaluate(x);
            if (!v.is_zero()) m.rows_[static_cast<std::size_t>(r)].push_back({e.col, LaurentPoly(v)});
        }
    }
    return m;
}

PolyMatrix PolyMatrix::coefficient(int degree) const {
    PolyMatrix m(layout_);
    for (int r = 0; r < dim(); ++r) {
        for (const auto& e : rows_[static_cast<std::size_t>(r)]) {
            Rational v = e.value.coeff(degree);
            if (!v.is_zero()) m.rows_[static_cast<std::size_t>(r)].push_back({e.col, LaurentPoly(v)});
        }
    }
    return m;
}

int PolyMatrix::min_deg() const {
    std::optional<int> lo;
    for (const auto& row : rows_) {
        for (const auto& e : row) lo = lo ? std::min(*lo, e.value.min_deg()) : e.value.min_deg();
    }
    return lo.value_or(0);
}

int PolyMatrix::max_deg() const {
    std::optional<int> hi;
    for (const auto& row : rows_) {
        for (const auto& e : row) hi = hi ? std::max(*hi, e.value.max_deg()) : e.value.max_deg();
    }
    return hi.value_or(0);
}

LaurentPoly PolyMatrix::trace() const {
    LaurentPoly t;
    for (int i = 0; i < dim(); ++i) t += at(i, i);
    return t;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
    require_same_dim(*this, o, "matrix sum");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& orow = o.rows_[r];
        if (orow.empty()) continue;
        auto& row = rows_[r];
        std::vector<Entry> merged;
        merged.reserve(row.size() + orow.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < orow.size()) {
            if (j == orow.size() || (i < row.size() && row[i].col < orow[j].col)) {
                merged.push_back(std::move(row[i++]));
            } else if (i == row.size() || orow[j].col < row[i].col) {
                merged.push_back(orow[j++]);
            } else {
                LaurentPoly v = std::move(row[i].value);
                v += orow[j].value;
                if (!v.is_zero()) merged.push_back({row[i].col, std::move(v)});
                ++i;
                ++j;
            }
        }
        row = std::move(merged);
    }
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
    PolyMatrix neg = o;
    neg *= LaurentPoly(-1);
    return *this += neg;
}

PolyMatrix& PolyMatrix::operator*=(const LaurentPoly& s) {
    for (auto& row : rows_) {
        for (auto& e : row) e.value *= s;
        std::erase_if(row, [](const Entry& e) { return e.value.is_zero(); });
    }
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_dim(a, b, "matrix product");
    PolyMatrix out(a.layout_);
    const auto n = static_cast<std::size_t>(a.dim());
    std::vector<LaurentPoly> acc(n);
    std::vector<char> touched(n, 0);
    std::vector<int> cols;
    for (std::size_t r = 0; r < n; ++r) {
        cols.clear();
        for (const auto& ea : a.rows_[r]) {
            for (const auto& eb : b.rows_[static_cast<std::size_t>(ea.col)]) {
                const auto c = static_cast<std::size_t>(eb.col);
                if (!touched[c]) {
                    touched[c] = 1;
                    cols.push_back(eb.col);
                }
                acc[c].add_product(ea.value, eb.value);
            }
        }
        std::sort(cols.begin(), cols.end());
        auto& row = out.rows_[r];
        for (int c : cols) {
            auto& v = acc[static_cast<std::size_t>(c)];
            if (!v.is_zero()) row.push_back({c, std::move(v)});
            v = LaurentPoly();
            touched[static_cast<std::size_t>(c)] = 0;
        }
    }
    return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t r = 0; r < a.rows_.size(); ++r) {
        const auto& x = a.rows_[r];
        const auto& y = b.rows_[r];
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].col != y[i].col || !(x[i].value == y[i].value)) return false;
        }
    }
    return true;
}

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) { return a * b - b * a; }

PolyMatrix product(std::span<const PolyMatrix> factors) {
    if (factors.empty()) throw DimensionMismatch("product of an empty factor list");
    PolyMatrix out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = out * factors[i];
    return out;
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
    Layout layout = a.layout();
    layout.insert(layout.end(), b.layout().begin(), b.layout().end());
    PolyMatrix m(std::move(layout));
    const int db = b.dim();
    for (int ra = 0; ra < a.dim(); ++ra) {
        for (const auto& ea : a.row(ra)) {
            for (int rb = 0; rb < db; ++rb) {
                for (const auto& eb : b.row(rb)) m.set(ra * db + rb, ea.col * db + eb.col, ea.value * eb.value);
            }
        }
    }
    return m;
}

PolyMatrix embed(const PolyMatrix& op, const std::vector<int>& positions, const Layout& layout) {
    const int nf = static_cast<int>(layout.size());
    if (positions.size() != op.layout().size()) {
        throw DimensionMismatch("embed: operator has " + std::to_string(op.layout().size()) + " factors, " +
                                std::to_string(positions.size()) + " positions given");
    }
    for (std::size_t t = 0; t < positions.size(); ++t) {
        const int p = positions[t];
        if (p < 0 || p >= nf) throw DimensionMismatch("embed: position " + std::to_string(p) + " outside layout");
        if (layout[static_cast<std::size_t>(p)] != op.layout()[t]) {
            throw DimensionMismatch("embed: factor dimension mismatch at position " + std::to_string(p));
        }
        for (std::size_t s = 0; s < t; ++s) {
            if (positions[s] == p) throw DimensionMismatch("embed: repeated position");
        }
    }
    const auto strides = strides_of(layout);
    const auto op_strides = strides_of(op.layout());
    PolyMatrix m(layout);
    for (int r = 0; r < m.dim(); ++r) {
        int a = 0;
        int base = r;
        for (std::size_t t = 0; t < positions.size(); ++t) {
            const int s = strides[static_cast<std::size_t>(positions[t])];
            const int d = (r / s) % layout[static_cast<std::size_t>(positions[t])];
            a += d * op_strides[t];
            base -= d * s;
        }
        for (const auto& e : op.row(a)) {
            int c = base;
            for (std::size_t t = 0; t < positions.size(); ++t) {
                const int d = (e.col / op_strides[t]) % op.layout()[t];
                c += d * strides[static_cast<std::size_t>(positions[t])];
            }
            m.set(r, c, e.value);
        }
    }
    return m;
}

PolyMatrix permutation(const Layout& layout, int a, int b) {
    const int nf = static_cast<int>(layout.size());
    if (a < 0 || b < 0 || a >= nf || b >= nf) throw DimensionMismatch("permutation: factor out of range");
    if (layout[static_cast<std::size_t>(a)] != layout[static_cast<std::size_t>(b)]) {
        throw DimensionMismatch("permutation: factors have different dimensions");
    }
    const auto strides = strides_of(layout);
    const int sa = strides[static_cast<std::size_t>(a)];
    const int sb = strides[static_cast<std::size_t>(b)];
    const int d = layout[static_cast<std::size_t>(a)];
    PolyMatrix m(layout);
    for (int r = 0; r < m.dim(); ++r) {
        const int da = (r / sa) % d;
        const int db = (r / sb) % d;
        m.set(r, r + (db - da) * sa + (da - db) * sb, LaurentPoly(1));
    }
    return m;
}

PolyMatrix partial_trace_first(const PolyMatrix& a) {
    if (a.layout().size() < 2) throw DimensionMismatch("partial_trace_first needs at least two factors");
    Layout rest(a.layout().begin() + 1, a.layout().end());
    PolyMatrix m(rest);
    const int d = m.dim();
    const int n0 = a.layout().front();
    for (int x = 0; x < n0; ++x) {
        for (int r = 0; r < d; ++r) {
            for (const auto& e : a.row(x * d + r)) {
                if (e.col / d == x) m.add_to(r, e.col % d, e.value);
            }
        }
    }
    return m;
}

std::optional<PolyRatio> mat_proportional(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.dim() != b.dim()) return std::nullopt;
    std::optional<PolyRatio> ratio;
    for (int r = 0; r < a.dim(); ++r) {
        const auto ra = a.row(r);
        const auto rb = b.row(r);
        if (ra.size() != rb.size()) return std::nullopt;
        for (std::size_t i = 0; i < ra.size(); ++i) {
            if (ra[i].col != rb[i].col) return std::nullopt;
            if (!ratio) {
                ratio = PolyRatio::reduced(ra[i].value, rb[i].value);
                continue;
            }
            if (!(ra[i].value * ratio->den == rb[i].value * ratio->num)) return std::nullopt;
        }
    }
    if (!ratio) return PolyRatio{LaurentPoly(1), LaurentPoly(1)};
    return ratio;
}

std::optional<EntryDiff> first_difference(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_dim(a, b, "first_difference");
    for (int r = 0; r < a.dim(); ++r) {
        const auto ra = a.row(r);
        const auto rb = b.row(r);
        std::size_t i = 0, j = 0;
        while (i < ra.size() || j < rb.size()) {
            const int ca = i < ra.size() ? ra[i].col : a.dim();
            const int cb = j < rb.size() ? rb[j].col : a.dim();
            if (ca < cb) return EntryDiff{r, ca, ra[i].value, LaurentPoly()};
            if (cb < ca) return EntryDiff{r, cb, LaurentPoly(), rb[j].value};
            if (!(ra[i].value == rb[j].value)) return EntryDiff{r, ca, ra[i].value, rb[j].value};
            ++i;
            ++j;
        }
    }
    return std::nullopt;
}

}  // namespace hecke
