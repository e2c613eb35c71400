#pragma once

/* Test-only oracles, deliberately independent of the library: a naive
 * fraction type over long long and plain Gaussian elimination. Only ever used
 * on small matrices, so overflow is not a concern. */

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

struct Frac {
    long long n = 0, d = 1;
    Frac(long long nn = 0, long long dd = 1) : n(nn), d(dd)
    {
        if (d == 0)
            throw std::runtime_error("oracle: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
    }
    friend Frac operator+(Frac a, Frac b) { return Frac(a.n * b.d + b.n * a.d, a.d * b.d); }
    friend Frac operator-(Frac a, Frac b) { return Frac(a.n * b.d - b.n * a.d, a.d * b.d); }
    friend Frac operator*(Frac a, Frac b) { return Frac(a.n * b.n, a.d * b.d); }
    friend Frac operator/(Frac a, Frac b) { return Frac(a.n * b.d, a.d * b.n); }
    friend bool operator==(Frac a, Frac b) { return a.n == b.n && a.d == b.d; }
    bool zero() const { return n == 0; }
};

using Mat = std::vector<std::vector<Frac>>;

inline int rank(Mat m)
{
    if (m.empty())
        return 0;
    size_t rows = m.size(), cols = m[0].size();
    int r = 0;
    for (size_t c = 0; c < cols && r < static_cast<int>(rows); ++c) {
        size_t piv = rows;
        for (size_t i = r; i < rows; ++i)
            if (!m[i][c].zero()) {
                piv = i;
                break;
            }
        if (piv == rows)
            continue;
        std::swap(m[piv], m[static_cast<size_t>(r)]);
        Frac lead = m[static_cast<size_t>(r)][c];
        for (size_t j = 0; j < cols; ++j)
            m[static_cast<size_t>(r)][j] = m[static_cast<size_t>(r)][j] / lead;
        for (size_t i = 0; i < rows; ++i) {
            if (i == static_cast<size_t>(r) || m[i][c].zero())
                continue;
            Frac f = m[i][c];
            for (size_t j = 0; j < cols; ++j)
                m[i][j] = m[i][j] - f * m[static_cast<size_t>(r)][j];
        }
        ++r;
    }
    return r;
}

/* Solvability of m x = b, decided by rank comparison. */
inline bool solvable(const Mat& m, const std::vector<Frac>& b)
{
    Mat aug = m;
    for (size_t i = 0; i < m.size(); ++i)
        aug[i].push_back(b[i]);
    return rank(m) == rank(aug);
}

}  // namespace oracle
