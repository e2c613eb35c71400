#include "mhcat/qmatrix.hpp"

#include <stdexcept>

namespace mhcat {

Rat rat_parse(const std::string& s)
{
    if (s.empty())
        throw std::runtime_error("empty rational literal");
    Rat x;
    if (x.set_str(s, 10) != 0)
        throw std::runtime_error("bad rational literal: " + s);
    if (x.get_den() == 0)
        throw std::runtime_error("zero denominator: " + s);
    x.canonicalize();
    return x;
}

std::string rat_str(const Rat& x)
{
    return x.get_str();
}

QMatrix QMatrix::identity(int n)
{
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool QMatrix::is_zero() const
{
    for (const auto& x : a)
        if (x != 0)
            return false;
    return true;
}

bool QMatrix::is_identity() const
{
    if (rows != cols)
        return false;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

QMatrix QMatrix::transpose() const
{
    QMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const
{
    if (cols != o.rows)
        throw std::runtime_error("matrix product shape mismatch");
    QMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rat& x = at(i, k);
            if (x == 0)
                continue;
            for (int j = 0; j < o.cols; ++j)
                if (o.at(k, j) != 0)
                    r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const
{
    if (rows != o.rows || cols != o.cols)
        throw std::runtime_error("matrix sum shape mismatch");
    QMatrix r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i)
        r.a[i] = a[i] + o.a[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const
{
    if (rows != o.rows || cols != o.cols)
        throw std::runtime_error("matrix difference shape mismatch");
    QMatrix r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i)
        r.a[i] = a[i] - o.a[i];
    return r;
}

QMatrix QMatrix::operator-() const
{
    QMatrix r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i)
        r.a[i] = -a[i];
    return r;
}

QMatrix QMatrix::scaled(const Rat& c) const
{
    QMatrix r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i)
        r.a[i] = a[i] * c;
    return r;
}

QVec QMatrix::apply(const QVec& v) const
{
    if (static_cast<int>(v.size()) != cols)
        throw std::runtime_error("matrix apply shape mismatch");
    QVec r(rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != 0 && v[j] != 0)
                r[i] += at(i, j) * v[j];
    return r;
}

QMatrix QMatrix::col(int j) const
{
    return cols_range(j, j + 1);
}

QMatrix QMatrix::cols_range(int j0, int j1) const
{
    QMatrix r(rows, j1 - j0);
    for (int i = 0; i < rows; ++i)
        for (int j = j0; j < j1; ++j)
            r.at(i, j - j0) = at(i, j);
    return r;
}

QMatrix QMatrix::hstack(const QMatrix& l, const QMatrix& r)
{
    if (l.rows != r.rows)
        throw std::runtime_error("hstack shape mismatch");
    QMatrix m(l.rows, l.cols + r.cols);
    for (int i = 0; i < l.rows; ++i) {
        for (int j = 0; j < l.cols; ++j)
            m.at(i, j) = l.at(i, j);
        for (int j = 0; j < r.cols; ++j)
            m.at(i, l.cols + j) = r.at(i, j);
    }
    return m;
}

QMatrix QMatrix::vstack(const QMatrix& t, const QMatrix& b)
{
    if (t.cols != b.cols)
        throw std::runtime_error("vstack shape mismatch");
    QMatrix m(t.rows + b.rows, t.cols);
    for (int i = 0; i < t.rows; ++i)
        for (int j = 0; j < t.cols; ++j)
            m.at(i, j) = t.at(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j)
            m.at(t.rows + i, j) = b.at(i, j);
    return m;
}

QMatrix QMatrix::from_cols(const std::vector<QVec>& cs, int nrows)
{
    QMatrix m(nrows, static_cast<int>(cs.size()));
    for (size_t j = 0; j < cs.size(); ++j) {
        if (static_cast<int>(cs[j].size()) != nrows)
            throw std::runtime_error("from_cols shape mismatch");
        for (int i = 0; i < nrows; ++i)
            m.at(i, static_cast<int>(j)) = cs[j][i];
    }
    return m;
}

Rref rref(const QMatrix& m)
{
    Rref r;
    r.mat = m;
    QMatrix& A = r.mat;
    int row = 0;
    for (int col = 0; col < A.cols && row < A.rows; ++col) {
        int piv = -1;
        for (int i = row; i < A.rows; ++i)
            if (A.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != row)
            for (int j = 0; j < A.cols; ++j)
                std::swap(A.at(piv, j), A.at(row, j));
        Rat inv = 1 / A.at(row, col);
        for (int j = col; j < A.cols; ++j)
            A.at(row, j) *= inv;
        for (int i = 0; i < A.rows; ++i) {
            if (i == row || A.at(i, col) == 0)
                continue;
            Rat f = A.at(i, col);
            for (int j = col; j < A.cols; ++j)
                A.at(i, j) -= f * A.at(row, j);
        }
        r.pivots.push_back(col);
        ++row;
    }
    return r;
}

int rank(const QMatrix& m)
{
    return static_cast<int>(rref(m).pivots.size());
}

QMatrix kernel_basis(const QMatrix& m)
{
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : r.pivots)
        is_pivot[p] = true;
    std::vector<QVec> cols;
    for (int j = 0; j < m.cols; ++j) {
        if (is_pivot[j])
            continue;
        QVec v(m.cols);
        v[j] = 1;
        for (size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = -r.mat.at(static_cast<int>(i), j);
        cols.push_back(std::move(v));
    }
    return QMatrix::from_cols(cols, m.cols);
}

std::optional<QVec> solve(const QMatrix& m, const QVec& b)
{
    if (static_cast<int>(b.size()) != m.rows)
        throw std::runtime_error("solve: rhs length mismatch");
    QMatrix aug = QMatrix::hstack(m, QMatrix::from_cols({b}, m.rows));
    Rref r = rref(aug);
    for (int p : r.pivots)
        if (p == m.cols)
            return std::nullopt;
    QVec x(m.cols);
    for (size_t i = 0; i < r.pivots.size(); ++i)
        x[r.pivots[i]] = r.mat.at(static_cast<int>(i), m.cols);
    return x;
}

std::optional<QMatrix> solve_matrix(const QMatrix& m, const QMatrix& b)
{
    if (b.rows != m.rows)
        throw std::runtime_error("solve_matrix: rhs shape mismatch");
    QMatrix aug = QMatrix::hstack(m, b);
    Rref r = rref(aug);
    for (int p : r.pivots)
        if (p >= m.cols)
            return std::nullopt;
    QMatrix x(m.cols, b.cols);
    for (size_t i = 0; i < r.pivots.size(); ++i)
        for (int j = 0; j < b.cols; ++j)
            x.at(r.pivots[i], j) = r.mat.at(static_cast<int>(i), m.cols + j);
    return x;
}

std::optional<QMatrix> inverse(const QMatrix& m)
{
    if (m.rows != m.cols)
        return std::nullopt;
    auto x = solve_matrix(m, QMatrix::identity(m.rows));
    if (!x)
        return std::nullopt;
    if (!((*x) * m).is_identity())
        return std::nullopt;
    return x;
}

ColBasis column_basis(const QMatrix& m)
{
    Rref r = rref(m.transpose());
    ColBasis b;
    b.basis = QMatrix(m.rows, static_cast<int>(r.pivots.size()));
    for (size_t k = 0; k < r.pivots.size(); ++k)
        for (int i = 0; i < m.rows; ++i)
            b.basis.at(i, static_cast<int>(k)) = r.mat.at(static_cast<int>(k), i);
    b.pivot_rows = r.pivots;
    return b;
}

QVec reduce_mod(const ColBasis& b, QVec v)
{
    for (size_t k = 0; k < b.pivot_rows.size(); ++k) {
        const Rat& c = v[b.pivot_rows[k]];
        if (c == 0)
            continue;
        Rat f = c;  // pivot entries are 1
        for (int i = 0; i < b.basis.rows; ++i)
            if (b.basis.at(i, static_cast<int>(k)) != 0)
                v[i] -= f * b.basis.at(i, static_cast<int>(k));
    }
    return v;
}

QMatrix quotient_basis(const QMatrix& sub, const QMatrix& whole)
{
    if (sub.rows != whole.rows)
        throw std::runtime_error("quotient_basis shape mismatch");
    ColBasis s = column_basis(sub);
    // Canonical form: image of whole in the coordinates complementary to
    // sub's pivot rows, column-echelon reduced there, then lifted by
    // reducing against sub.
    std::vector<bool> sub_piv(whole.rows, false);
    for (int p : s.pivot_rows)
        sub_piv[p] = true;
    QMatrix reduced(whole.rows, whole.cols);
    for (int j = 0; j < whole.cols; ++j) {
        QVec v(whole.rows);
        for (int i = 0; i < whole.rows; ++i)
            v[i] = whole.at(i, j);
        v = reduce_mod(s, std::move(v));
        for (int i = 0; i < whole.rows; ++i)
            reduced.at(i, j) = v[i];
    }
    ColBasis q = column_basis(reduced);
    // Columns of q.basis already vanish at sub pivot rows, so they are the
    // canonical lifted representatives.
    return q.basis;
}

std::optional<QVec> coords_in(const QMatrix& basis, const QVec& v)
{
    return solve(basis, v);
}

bool in_span(const QMatrix& gens, const QVec& v)
{
    return solve(gens, v).has_value();
}

}  // namespace mhcat
