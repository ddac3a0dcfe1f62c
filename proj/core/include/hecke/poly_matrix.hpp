#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hecke/laurent_poly.hpp"

namespace hecke {

// Dimensions of the tensor factors, leftmost first. Factor 0 of a transfer
// matrix construction is the auxiliary space.
using Layout = std::vector<int>;

int layout_dim(const Layout& layout);

// Square sparse matrix over the Laurent ring, rows stored as column-sorted
// entry lists. Zero entries are never stored.
class PolyMatrix {
public:
    struct Entry {
        int col;
        LaurentPoly value;
    };

    PolyMatrix() = default;
    explicit PolyMatrix(Layout layout);

    static PolyMatrix identity(Layout layout, const Rational& scale = Rational(1));
    static PolyMatrix unit(Layout layout, int row, int col, const LaurentPoly& value = LaurentPoly(1));
    // Dense constant matrix; the layout defaults to a single factor.
    static PolyMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
    static PolyMatrix diagonal(const std::vector<Rational>& diag);

    [[nodiscard]] int dim() const { return static_cast<int>(rows_.size()); }
    [[nodiscard]] const Layout& layout() const { return layout_; }
    [[nodiscard]] std::span<const Entry> row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
    [[nodiscard]] const LaurentPoly& at(int r, int c) const;
    [[nodiscard]] std::size_t nnz() const;
    [[nodiscard]] bool is_zero() const { return nnz() == 0; }

    // Entries are overwritten; setting zero erases.
    void set(int r, int c, LaurentPoly value);
    void add_to(int r, int c, const LaurentPoly& value);

    // Same entries, different factorization of the same dimension.
    [[nodiscard]] PolyMatrix relabeled(Layout layout) const;

    [[nodiscard]] PolyMatrix transposed() const;
    [[nodiscard]] PolyMatrix partial_transpose(int factor) const;
    [[nodiscard]] PolyMatrix shifted(int k) const;
    [[nodiscard]] PolyMatrix substituted(const Rational& c, int k) const;
    [[nodiscard]] PolyMatrix evaluated(const Rational& x) const;
    // Constant matrix of the u^degree coefficients.
    [[nodiscard]] PolyMatrix coefficient(int degree) const;
    // Lowest and highest degree over all entries; (0, 0) for the zero matrix.
    [[nodiscard]] int min_deg() const;
    [[nodiscard]] int max_deg() const;
    [[nodiscard]] LaurentPoly trace() const;

    PolyMatrix& operator+=(const PolyMatrix& o);
    PolyMatrix& operator-=(const PolyMatrix& o);
    PolyMatrix& operator*=(const LaurentPoly& s);

    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(PolyMatrix a, const LaurentPoly& s) { return a *= s; }
    friend PolyMatrix operator*(const LaurentPoly& s, PolyMatrix a) { return a *= s; }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

private:
    Layout layout_;
    std::vector<std::vector<Entry>> rows_;
};

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b);
// Ordered product of the given factors, left to right.
PolyMatrix product(std::span<const PolyMatrix> factors);

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);

// Places op on the listed factors of layout (in the listed order, so {2, 0}
// acts with op's first factor on position 2) and the identity elsewhere.
PolyMatrix embed(const PolyMatrix& op, const std::vector<int>& positions, const Layout& layout);

// Swap of factors a and b.
PolyMatrix permutation(const Layout& layout, int a, int b);

PolyMatrix partial_trace_first(const PolyMatrix& a);

// Ratio r with a = r * b entrywise, r a rational function; nullopt when the
// supports differ or any entry disagrees. (0, 0) gives ratio 1.
std::optional<PolyRatio> mat_proportional(const PolyMatrix& a, const PolyMatrix& b);

// First entry where a and b differ, if any.
struct EntryDiff {
    int row;
    int col;
    LaurentPoly lhs;
    LaurentPoly rhs;
};
std::optional<EntryDiff> first_difference(const PolyMatrix& a, const PolyMatrix& b);

// Canonical JSON dump: {"dim", "layout", "entries": [[row, col, [[deg, num, den], ...]], ...]}
// with num and den as decimal strings.
std::string to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const std::string& text);

}  // namespace hecke
