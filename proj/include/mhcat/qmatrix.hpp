#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace mhcat {

using Rat = mpq_class;
using QVec = std::vector<Rat>;

Rat rat_parse(const std::string& s);
std::string rat_str(const Rat& x);

/* Dense matrix of exact rationals, row-major. The arithmetic substrate of
 * everything else: all bases returned by the library are canonical reduced
 * echelon forms so results are deterministic and diffable. */
struct QMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static QMatrix identity(int n);
    static QMatrix zero(int r, int c) { return QMatrix(r, c); }

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const QMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const QMatrix& o) const { return !(*this == o); }

    QMatrix transpose() const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator-() const;
    QMatrix scaled(const Rat& c) const;

    QVec apply(const QVec& v) const;

    QMatrix col(int j) const;
    QMatrix cols_range(int j0, int j1) const;  // [j0, j1)
    static QMatrix hstack(const QMatrix& l, const QMatrix& r);
    static QMatrix vstack(const QMatrix& t, const QMatrix& b);
    static QMatrix from_cols(const std::vector<QVec>& cs, int rows);
};

struct Rref {
    QMatrix mat;             // row-reduced echelon form
    std::vector<int> pivots; // pivot column per nonzero row
};

Rref rref(const QMatrix& m);

int rank(const QMatrix& m);

/* Columns form the canonical basis of ker(m): free variables in increasing
 * index order, each set to 1 in its own column. */
QMatrix kernel_basis(const QMatrix& m);

/* Canonical particular solution of m x = b (free variables 0), or nullopt. */
std::optional<QVec> solve(const QMatrix& m, const QVec& b);

/* Solve m X = B columnwise; nullopt if any column is inconsistent. */
std::optional<QMatrix> solve_matrix(const QMatrix& m, const QMatrix& b);

std::optional<QMatrix> inverse(const QMatrix& m);

/* Canonical basis of the column space: reduced column echelon, leftmost
 * (topmost) pivots. Second member lists the pivot row of each basis column. */
struct ColBasis {
    QMatrix basis;
    std::vector<int> pivot_rows;
};
ColBasis column_basis(const QMatrix& m);

/* Reduce v against a reduced column echelon basis: subtract multiples of the
 * basis columns to zero out v at every pivot row. The result is the canonical
 * representative of v modulo span(basis). */
QVec reduce_mod(const ColBasis& b, QVec v);

/* Canonical representatives of span(whole)/span(sub), as columns.
 * Representatives are reduced against sub and against each other. */
QMatrix quotient_basis(const QMatrix& sub, const QMatrix& whole);

/* Coordinates of v in the independent columns of basis; nullopt if outside. */
std::optional<QVec> coords_in(const QMatrix& basis, const QVec& v);

bool in_span(const QMatrix& gens, const QVec& v);

}  // namespace mhcat
