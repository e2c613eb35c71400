#include "mhcat/complex.hpp"

namespace mhcat {

static const FormalSum kEmptySum{};

const FormalSum& Complex::term(int n) const
{
    if (!in_support(n))
        return kEmptySum;
    return terms[static_cast<size_t>(n - lo)];
}

Complex Complex::concentrated(const FormalSum& s, int n)
{
    Complex x;
    x.lo = n;
    x.hi = n;
    x.terms = {s};
    return x;
}

Complex Complex::empty()
{
    return Complex{};
}

AMor complex_diff(const CategoryPresentation& cat, const Complex& x, int n)
{
    if (n - 1 >= x.lo && n <= x.hi)
        return x.diffs[static_cast<size_t>(n - 1 - x.lo)];
    return cat.zero_mor(x.term(n), x.term(n - 1));
}

void check_complex(const CategoryPresentation& cat, const Complex& x)
{
    if (x.is_empty())
        return;
    if (static_cast<int>(x.terms.size()) != x.hi - x.lo + 1)
        throw Error("complex term table shape mismatch");
    if (static_cast<int>(x.diffs.size()) != std::max(0, x.hi - x.lo))
        throw Error("complex differential table shape mismatch");
    for (int n = x.lo + 1; n <= x.hi; ++n) {
        const AMor& d = x.diffs[static_cast<size_t>(n - 1 - x.lo)];
        if (!(d.src == x.term(n)) || !(d.tgt == x.term(n - 1)))
            throw Error("differential endpoints mismatch at degree " + std::to_string(n));
    }
    for (int n = x.lo + 2; n <= x.hi; ++n) {
        AMor dd = cat.compose(complex_diff(cat, x, n - 1), complex_diff(cat, x, n));
        if (!cat.is_zero_mor(dd))
            throw Error("d∘d != 0 at degree " + std::to_string(n));
    }
}

Complex normalize_complex(const Complex& x)
{
    int lo = x.lo, hi = x.hi;
    while (lo <= hi && x.term(lo).empty())
        ++lo;
    while (hi >= lo && x.term(hi).empty())
        --hi;
    if (hi < lo)
        return Complex::empty();
    Complex r;
    r.lo = lo;
    r.hi = hi;
    for (int n = lo; n <= hi; ++n)
        r.terms.push_back(x.term(n));
    for (int n = lo + 1; n <= hi; ++n)
        r.diffs.push_back(x.diffs[static_cast<size_t>(n - 1 - x.lo)]);
    return r;
}

Complex shift_complex(const CategoryPresentation& cat, const Complex& x, int k)
{
    if (k == 0)
        return x;
    if (x.is_empty())
        return x;
    Complex r;
    r.lo = x.lo + k;
    r.hi = x.hi + k;
    r.terms = x.terms;
    Rat sign = (k % 2 == 0) ? 1 : -1;
    for (const AMor& d : x.diffs)
        r.diffs.push_back(cat.scale(d, sign));
    return r;
}

Complex sum_complex(const CategoryPresentation& cat, const Complex& x, const Complex& y)
{
    if (x.is_empty())
        return y;
    if (y.is_empty())
        return x;
    Complex r;
    r.lo = std::min(x.lo, y.lo);
    r.hi = std::max(x.hi, y.hi);
    for (int n = r.lo; n <= r.hi; ++n)
        r.terms.push_back(FormalSum::concat(x.term(n), y.term(n)));
    for (int n = r.lo + 1; n <= r.hi; ++n) {
        AMor d = cat.zero_mor(r.terms[static_cast<size_t>(n - r.lo)], r.terms[static_cast<size_t>(n - 1 - r.lo)]);
        AMor dx = complex_diff(cat, x, n);
        AMor dy = complex_diff(cat, y, n);
        for (int i = 0; i < dx.tgt.size(); ++i)
            for (int j = 0; j < dx.src.size(); ++j)
                d.blocks[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    dx.blocks[static_cast<size_t>(i)][static_cast<size_t>(j)];
        int ro = x.term(n - 1).size();
        int co = x.term(n).size();
        for (int i = 0; i < dy.tgt.size(); ++i)
            for (int j = 0; j < dy.src.size(); ++j)
                d.blocks[static_cast<size_t>(ro + i)][static_cast<size_t>(co + j)] =
                    dy.blocks[static_cast<size_t>(i)][static_cast<size_t>(j)];
        r.diffs.push_back(std::move(d));
    }
    return r;
}

std::map<int, int> tensor_complex_offsets(const CategoryPresentation& cat, const Complex& x, const Complex& y,
                                          int n)
{
    std::map<int, int> off;
    int acc = 0;
    for (int p = x.lo; p <= x.hi; ++p) {
        int q = n - p;
        if (!y.in_support(q))
            continue;
        off[p] = acc;
        acc += cat.tensor_fs(x.term(p), y.term(q)).size();
    }
    return off;
}

namespace {
/* Copy the blocks of `small` into `big` at the given slot offsets. */
void place_blocks(AMor& big, const AMor& small, int row_off, int col_off)
{
    for (int i = 0; i < small.tgt.size(); ++i)
        for (int j = 0; j < small.src.size(); ++j)
            big.blocks[static_cast<size_t>(row_off + i)][static_cast<size_t>(col_off + j)] =
                small.blocks[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

void add_blocks(AMor& big, const AMor& small, int row_off, int col_off)
{
    for (int i = 0; i < small.tgt.size(); ++i)
        for (int j = 0; j < small.src.size(); ++j) {
            QVec& out = big.blocks[static_cast<size_t>(row_off + i)][static_cast<size_t>(col_off + j)];
            const QVec& in = small.blocks[static_cast<size_t>(i)][static_cast<size_t>(j)];
            for (size_t k = 0; k < in.size(); ++k)
                out[k] += in[k];
        }
}
}  // namespace

Complex tensor_complex(const CategoryPresentation& cat, const Complex& x, const Complex& y)
{
    if (x.is_empty() || y.is_empty())
        return Complex::empty();
    Complex r;
    r.lo = x.lo + y.lo;
    r.hi = x.hi + y.hi;
    for (int n = r.lo; n <= r.hi; ++n) {
        FormalSum term;
        for (int p = x.lo; p <= x.hi; ++p) {
            int q = n - p;
            if (!y.in_support(q))
                continue;
            term = FormalSum::concat(term, cat.tensor_fs(x.term(p), y.term(q)));
        }
        r.terms.push_back(std::move(term));
    }
    for (int n = r.lo + 1; n <= r.hi; ++n) {
        AMor d = cat.zero_mor(r.terms[static_cast<size_t>(n - r.lo)], r.terms[static_cast<size_t>(n - 1 - r.lo)]);
        auto src_off = tensor_complex_offsets(cat, x, y, n);
        auto tgt_off = tensor_complex_offsets(cat, x, y, n - 1);
        for (auto& [p, so] : src_off) {
            int q = n - p;
            if (tgt_off.count(p - 1) && x.in_support(p - 1)) {
                AMor piece = cat.tensor(complex_diff(cat, x, p), cat.identity_mor(y.term(q)));
                add_blocks(d, piece, tgt_off.at(p - 1), so);
            }
            if (tgt_off.count(p) && y.in_support(q - 1)) {
                AMor piece = cat.tensor(cat.identity_mor(x.term(p)), complex_diff(cat, y, q));
                if (p % 2 != 0)
                    piece = cat.negate(piece);
                add_blocks(d, piece, tgt_off.at(p), so);
            }
        }
        r.diffs.push_back(std::move(d));
    }
    return r;
}

Complex dual_complex(const CategoryPresentation& cat, const Complex& x)
{
    if (x.is_empty())
        return x;
    Complex r;
    r.lo = -x.hi;
    r.hi = -x.lo;
    for (int m = r.lo; m <= r.hi; ++m)
        r.terms.push_back(cat.dual_fs(x.term(-m)));
    for (int m = r.lo + 1; m <= r.hi; ++m) {
        // delta_m = (-1)^{m+1} (d_{-m+1})^T : dual(X_{-m}) → dual(X_{-m+1})
        AMor t = cat.transpose_mor(complex_diff(cat, x, -m + 1));
        if ((m % 2) == 0)
            t = cat.negate(t);
        r.diffs.push_back(std::move(t));
    }
    return r;
}

AMor chain_comp(const CategoryPresentation& cat, const ChainMap& f, int n)
{
    auto it = f.comps.find(n);
    if (it != f.comps.end())
        return it->second;
    return cat.zero_mor(f.src.term(n), f.tgt.term(n));
}

ChainMap zero_chain_map(const CategoryPresentation& cat, const Complex& x, const Complex& y)
{
    (void)cat;
    return ChainMap{x, y, {}};
}

ChainMap identity_chain_map(const CategoryPresentation& cat, const Complex& x)
{
    ChainMap f{x, x, {}};
    for (int n = x.lo; n <= x.hi; ++n)
        if (!x.term(n).empty())
            f.comps[n] = cat.identity_mor(x.term(n));
    return f;
}

ChainMap compose_chain(const CategoryPresentation& cat, const ChainMap& g, const ChainMap& f)
{
    if (!(g.src == f.tgt))
        throw Error("chain compose mismatch");
    ChainMap r{f.src, g.tgt, {}};
    for (auto& [n, fc] : f.comps) {
        if (g.tgt.term(n).empty())
            continue;
        AMor c = cat.compose(chain_comp(cat, g, n), fc);
        if (!cat.is_zero_mor(c))
            r.comps[n] = std::move(c);
    }
    return r;
}

ChainMap add_chain(const CategoryPresentation& cat, const ChainMap& f, const ChainMap& g)
{
    if (!(f.src == g.src) || !(f.tgt == g.tgt))
        throw Error("chain add mismatch");
    ChainMap r = f;
    for (auto& [n, gc] : g.comps) {
        auto it = r.comps.find(n);
        if (it == r.comps.end())
            r.comps[n] = gc;
        else {
            it->second = cat.add(it->second, gc);
            if (cat.is_zero_mor(it->second))
                r.comps.erase(it);
        }
    }
    return r;
}

ChainMap scale_chain(const CategoryPresentation& cat, const ChainMap& f, const Rat& c)
{
    ChainMap r{f.src, f.tgt, {}};
    if (c == 0)
        return r;
    for (auto& [n, fc] : f.comps)
        r.comps[n] = cat.scale(fc, c);
    return r;
}

ChainMap shift_chain_map(const CategoryPresentation& cat, const ChainMap& f, int k)
{
    ChainMap r{shift_complex(cat, f.src, k), shift_complex(cat, f.tgt, k), {}};
    for (auto& [n, fc] : f.comps)
        r.comps[n + k] = fc;
    return r;
}

ChainMap tensor_chain_map(const CategoryPresentation& cat, const ChainMap& f, const ChainMap& g)
{
    Complex src = tensor_complex(cat, f.src, g.src);
    Complex tgt = tensor_complex(cat, f.tgt, g.tgt);
    ChainMap r{src, tgt, {}};
    for (int n = src.lo; n <= src.hi; ++n) {
        if (!tgt.in_support(n) || src.term(n).empty() || tgt.term(n).empty())
            continue;
        AMor comp = cat.zero_mor(src.term(n), tgt.term(n));
        auto so = tensor_complex_offsets(cat, f.src, g.src, n);
        auto to = tensor_complex_offsets(cat, f.tgt, g.tgt, n);
        bool nonzero = false;
        for (auto& [p, off_s] : so) {
            if (!to.count(p))
                continue;
            int q = n - p;
            AMor piece = cat.tensor(chain_comp(cat, f, p), chain_comp(cat, g, q));
            if (!cat.is_zero_mor(piece)) {
                place_blocks(comp, piece, to.at(p), off_s);
                nonzero = true;
            }
        }
        if (nonzero)
            r.comps[n] = std::move(comp);
    }
    return r;
}

ChainMap symmetry_chain_map(const CategoryPresentation& cat, const Complex& x, const Complex& y)
{
    Complex src = tensor_complex(cat, x, y);
    Complex tgt = tensor_complex(cat, y, x);
    ChainMap r{src, tgt, {}};
    for (int n = src.lo; n <= src.hi; ++n) {
        if (src.term(n).empty())
            continue;
        AMor comp = cat.zero_mor(src.term(n), tgt.term(n));
        auto so = tensor_complex_offsets(cat, x, y, n);
        auto to = tensor_complex_offsets(cat, y, x, n);
        for (auto& [p, off_s] : so) {
            int q = n - p;
            AMor piece = cat.symmetry_fs(x.term(p), y.term(q));
            if ((p * q) % 2 != 0)
                piece = cat.negate(piece);
            place_blocks(comp, piece, to.at(q), off_s);
        }
        r.comps[n] = std::move(comp);
    }
    return r;
}


ChainMap assoc_chain_map(const CategoryPresentation& cat, const Complex& x, const Complex& y, const Complex& z)
{
    Complex xy = tensor_complex(cat, x, y);
    Complex yz = tensor_complex(cat, y, z);
    Complex src = tensor_complex(cat, xy, z);
    Complex tgt = tensor_complex(cat, x, yz);
    ChainMap f{src, tgt, {}};
    for (int n = src.lo; n <= src.hi; ++n) {
        if (src.term(n).empty())
            continue;
        AMor m = cat.zero_mor(src.term(n), tgt.term(n));
        auto src_grp = tensor_complex_offsets(cat, xy, z, n);
        auto tgt_grp = tensor_complex_offsets(cat, x, yz, n);
        for (int p = x.lo; p <= x.hi; ++p)
            for (int q = y.lo; q <= y.hi; ++q) {
                int r = n - p - q;
                if (!z.in_support(r))
                    continue;
                int m1 = p + q;
                int m2 = q + r;
                if (!xy.in_support(m1) || !yz.in_support(m2))
                    continue;
                const FormalSum& xp = x.term(p);
                const FormalSum& yq = y.term(q);
                const FormalSum& zr = z.term(r);
                if (xp.empty() || yq.empty() || zr.empty())
                    continue;
                int a0 = tensor_complex_offsets(cat, x, y, m1).at(p);   // slot offset of the (p,q) block in xy_m1
                int b0 = tensor_complex_offsets(cat, y, z, m2).at(q);   // slot offset of the (q,r) block in yz_m2
                auto off_xy = cat.tensor_fs_offsets(xp, yq);
                auto off_yz = cat.tensor_fs_offsets(yq, zr);
                auto off_s = cat.tensor_fs_offsets(xy.term(m1), zr);
                auto off_t = cat.tensor_fs_offsets(xp, yz.term(m2));
                for (int i = 0; i < xp.size(); ++i)
                    for (int j = 0; j < yq.size(); ++j) {
                        const FormalSum& ab = cat.tensor_of(xp.slots[static_cast<size_t>(i)],
                                                            yq.slots[static_cast<size_t>(j)]);
                        for (int k = 0; k < zr.size(); ++k) {
                            // source leaves: for t over ab-slots, the block tensor_of(ab_t, z_k)
                            // target leaves: slots of x_i ⊗ (y_j ⊗ z_k), same flattened list
                            int tpos = tgt_grp.at(p) +
                                       off_t[static_cast<size_t>(i)]
                                            [static_cast<size_t>(b0 + off_yz[static_cast<size_t>(j)]
                                                                            [static_cast<size_t>(k)])];
                            for (int t = 0; t < ab.size(); ++t) {
                                int u = a0 + off_xy[static_cast<size_t>(i)][static_cast<size_t>(j)] + t;
                                int spos = src_grp.at(m1) + off_s[static_cast<size_t>(u)][static_cast<size_t>(k)];
                                const FormalSum& leaf = cat.tensor_of(ab.slots[static_cast<size_t>(t)],
                                                                      zr.slots[static_cast<size_t>(k)]);
                                for (int l = 0; l < leaf.size(); ++l)
                                    m.blocks[static_cast<size_t>(tpos + l)][static_cast<size_t>(spos + l)] =
                                        cat.identity_coords[leaf.slots[static_cast<size_t>(l)]];
                                tpos += leaf.size();
                            }
                        }
                    }
            }
        f.comps[n] = std::move(m);
    }
    return f;
}

ChainMap coev_chain_map(const CategoryPresentation& cat, const Complex& x)
{
    Complex unit = Complex::concentrated(FormalSum::single(cat.unit));
    Complex xd = dual_complex(cat, x);
    Complex tgt = tensor_complex(cat, x, xd);
    ChainMap r{unit, tgt, {}};
    if (x.is_empty())
        return r;
    AMor comp = cat.zero_mor(FormalSum::single(cat.unit), tgt.term(0));
    auto off = tensor_complex_offsets(cat, x, xd, 0);
    for (int p = x.lo; p <= x.hi; ++p) {
        if (x.term(p).empty())
            continue;
        AMor cv = cat.coev_fs(x.term(p));
        place_blocks(comp, cv, off.at(p), 0);
    }
    if (!cat.is_zero_mor(comp))
        r.comps[0] = std::move(comp);
    return r;
}

ChainMap ev_chain_map(const CategoryPresentation& cat, const Complex& x)
{
    Complex unit = Complex::concentrated(FormalSum::single(cat.unit));
    Complex xd = dual_complex(cat, x);
    Complex src = tensor_complex(cat, xd, x);
    ChainMap r{src, unit, {}};
    if (x.is_empty())
        return r;
    AMor comp = cat.zero_mor(src.term(0), FormalSum::single(cat.unit));
    auto off = tensor_complex_offsets(cat, xd, x, 0);
    for (int p = x.lo; p <= x.hi; ++p) {
        if (x.term(p).empty())
            continue;
        AMor e = cat.ev_fs(x.term(p));
        place_blocks(comp, e, 0, off.at(-p));
    }
    if (!cat.is_zero_mor(comp))
        r.comps[0] = std::move(comp);
    return r;
}

ChainMap transpose_chain_map(const CategoryPresentation& cat, const ChainMap& f)
{
    ChainMap r{dual_complex(cat, f.tgt), dual_complex(cat, f.src), {}};
    for (auto& [n, fc] : f.comps) {
        AMor t = cat.transpose_mor(fc);
        if (!cat.is_zero_mor(t))
            r.comps[-n] = std::move(t);
    }
    return r;
}

void check_chain_map(const CategoryPresentation& cat, const ChainMap& f)
{
    for (auto& [n, fc] : f.comps)
        if (!(fc.src == f.src.term(n)) || !(fc.tgt == f.tgt.term(n)))
            throw Error("chain map component endpoints mismatch at degree " + std::to_string(n));
    if (!is_chain_map(cat, f))
        throw Error("components do not commute with differentials");
}

bool is_chain_map(const CategoryPresentation& cat, const ChainMap& f)
{
    int lo = std::min(f.src.lo, f.tgt.lo);
    int hi = std::max(f.src.hi, f.tgt.hi);
    for (int n = lo; n <= hi + 1; ++n) {
        AMor lhs = cat.compose(complex_diff(cat, f.tgt, n), chain_comp(cat, f, n));
        AMor rhs = cat.compose(chain_comp(cat, f, n - 1), complex_diff(cat, f.src, n));
        if (!cat.is_zero_mor(cat.sub(lhs, rhs)))
            return false;
    }
    return true;
}

/* ---------------- kb hom ---------------- */

KbHomSpace kb_hom(const CategoryPresentation& cat, const Complex& x, const Complex& y)
{
    KbHomSpace k;
    k.x = x;
    k.y = y;
    k.lo = std::max(x.lo, y.lo);
    k.hi = std::min(x.hi, y.hi);
    int nw = std::max(0, k.hi - k.lo + 1);
    if (nw == 0) {
        k.lo = 0;
        k.hi = -1;
    }
    k.offsets.assign(static_cast<size_t>(nw + 1), 0);
    for (int i = 0; i < nw; ++i)
        k.offsets[static_cast<size_t>(i + 1)] =
            k.offsets[static_cast<size_t>(i)] + cat.hom_flat_dim(x.term(k.lo + i), y.term(k.lo + i));
    int total = k.offsets.back();

    // chain map constraints: d_y ∘ f_n - f_{n-1} ∘ d_x = 0
    int crows = 0;
    std::vector<int> row_off;
    for (int n = k.lo; n <= k.hi + 1; ++n) {
        row_off.push_back(crows);
        crows += cat.hom_flat_dim(x.term(n), y.term(n - 1));
    }
    QMatrix C(crows, total);
    for (int n = k.lo; n <= k.hi + 1; ++n) {
        int ro = row_off[static_cast<size_t>(n - k.lo)];
        if (cat.hom_flat_dim(x.term(n), y.term(n - 1)) == 0)
            continue;
        if (n >= k.lo && n <= k.hi) {
            QMatrix m = cat.compose_left_matrix(complex_diff(cat, y, n), x.term(n));
            int co = k.offsets[static_cast<size_t>(n - k.lo)];
            for (int i = 0; i < m.rows; ++i)
                for (int j = 0; j < m.cols; ++j)
                    C.at(ro + i, co + j) = m.at(i, j);
        }
        if (n - 1 >= k.lo && n - 1 <= k.hi) {
            QMatrix m = cat.compose_right_matrix(complex_diff(cat, x, n), y.term(n - 1));
            int co = k.offsets[static_cast<size_t>(n - 1 - k.lo)];
            for (int i = 0; i < m.rows; ++i)
                for (int j = 0; j < m.cols; ++j)
                    C.at(ro + i, co + j) -= m.at(i, j);
        }
    }
    k.cycles = kernel_basis(C);

    // null-homotopic maps: image of h ↦ d_y h + h d_x
    int hlo = std::max(x.lo, y.lo - 1);
    int hhi = std::min(x.hi, y.hi - 1);
    int hnw = std::max(0, hhi - hlo + 1);
    std::vector<int> hoff(static_cast<size_t>(hnw + 1), 0);
    for (int i = 0; i < hnw; ++i)
        hoff[static_cast<size_t>(i + 1)] =
            hoff[static_cast<size_t>(i)] + cat.hom_flat_dim(x.term(hlo + i), y.term(hlo + i + 1));
    int htotal = hoff.back();
    QMatrix A(total, htotal);
    for (int n = hlo; n <= hhi; ++n) {
        if (cat.hom_flat_dim(x.term(n), y.term(n + 1)) == 0)
            continue;
        if (n >= k.lo && n <= k.hi) {
            QMatrix m = cat.compose_left_matrix(complex_diff(cat, y, n + 1), x.term(n));
            int ro = k.offsets[static_cast<size_t>(n - k.lo)];
            int co = hoff[static_cast<size_t>(n - hlo)];
            for (int i = 0; i < m.rows; ++i)
                for (int j = 0; j < m.cols; ++j)
                    A.at(ro + i, co + j) += m.at(i, j);
        }
        if (n + 1 >= k.lo && n + 1 <= k.hi) {
            QMatrix m = cat.compose_right_matrix(complex_diff(cat, x, n + 1), y.term(n + 1));
            int ro = k.offsets[static_cast<size_t>(n + 1 - k.lo)];
            int co = hoff[static_cast<size_t>(n - hlo)];
            for (int i = 0; i < m.rows; ++i)
                for (int j = 0; j < m.cols; ++j)
                    A.at(ro + i, co + j) += m.at(i, j);
        }
    }
    k.boundaries = column_basis(A).basis;
    k.reps = quotient_basis(k.boundaries, k.cycles);
    for (int j = 0; j < k.reps.cols; ++j) {
        QVec v(static_cast<size_t>(total));
        for (int i = 0; i < total; ++i)
            v[static_cast<size_t>(i)] = k.reps.at(i, j);
        k.basis.push_back(k.unflatten(cat, v));
    }
    return k;
}

QVec KbHomSpace::flatten(const CategoryPresentation& cat, const ChainMap& f) const
{
    QVec v(static_cast<size_t>(offsets.empty() ? 0 : offsets.back()));
    for (int n = lo; n <= hi; ++n) {
        QVec part = cat.flatten(chain_comp(cat, f, n));
        int off = offsets[static_cast<size_t>(n - lo)];
        for (size_t i = 0; i < part.size(); ++i)
            v[static_cast<size_t>(off) + i] = part[i];
    }
    return v;
}

ChainMap KbHomSpace::unflatten(const CategoryPresentation& cat, const QVec& v) const
{
    ChainMap f{x, y, {}};
    for (int n = lo; n <= hi; ++n) {
        int off = offsets[static_cast<size_t>(n - lo)];
        int len = offsets[static_cast<size_t>(n - lo + 1)] - off;
        if (len == 0)
            continue;
        QVec part(v.begin() + off, v.begin() + off + len);
        AMor m = cat.unflatten(x.term(n), y.term(n), part);
        if (!cat.is_zero_mor(m))
            f.comps[n] = std::move(m);
    }
    return f;
}

QVec KbHomSpace::coords(const CategoryPresentation& cat, const ChainMap& f) const
{
    QVec flat = flatten(cat, f);
    QMatrix sys = QMatrix::hstack(reps, boundaries);
    auto sol = solve(sys, flat);
    if (!sol)
        throw Error("coords: chain map is not in the hom space");
    return QVec(sol->begin(), sol->begin() + reps.cols);
}

ChainMap KbHomSpace::from_coords(const CategoryPresentation& cat, const QVec& c) const
{
    if (static_cast<int>(c.size()) != reps.cols)
        throw Error("from_coords: wrong length");
    QVec flat(static_cast<size_t>(offsets.empty() ? 0 : offsets.back()));
    for (int j = 0; j < reps.cols; ++j)
        for (int i = 0; i < reps.rows; ++i)
            if (reps.at(i, j) != 0)
                flat[static_cast<size_t>(i)] += c[static_cast<size_t>(j)] * reps.at(i, j);
    return unflatten(cat, flat);
}

bool homotopic(const CategoryPresentation& cat, const ChainMap& f, const ChainMap& g)
{
    return nullhomotopic(cat, add_chain(cat, f, scale_chain(cat, g, -1)));
}

bool nullhomotopic(const CategoryPresentation& cat, const ChainMap& f)
{
    KbHomSpace k = kb_hom(cat, f.src, f.tgt);
    QVec flat = k.flatten(cat, f);
    bool flat_zero = true;
    for (auto& v : flat)
        if (v != 0)
            flat_zero = false;
    if (flat_zero)
        return true;
    if (k.boundaries.cols == 0)
        return false;
    return in_span(k.boundaries, flat);
}

/* ---------------- cones and triangles ---------------- */

Cone cone(const CategoryPresentation& cat, const ChainMap& f)
{
    const Complex& x = f.src;
    const Complex& y = f.tgt;
    Cone c;
    if (x.is_empty() && y.is_empty()) {
        c.cone = Complex::empty();
        c.incl = ChainMap{y, c.cone, {}};
        c.proj = ChainMap{c.cone, shift_complex(cat, x, 1), {}};
        return c;
    }
    Complex z;
    z.lo = x.is_empty() ? y.lo : (y.is_empty() ? x.lo + 1 : std::min(x.lo + 1, y.lo));
    z.hi = x.is_empty() ? y.hi : (y.is_empty() ? x.hi + 1 : std::max(x.hi + 1, y.hi));
    for (int n = z.lo; n <= z.hi; ++n)
        z.terms.push_back(FormalSum::concat(x.term(n - 1), y.term(n)));
    for (int n = z.lo + 1; n <= z.hi; ++n) {
        const FormalSum& src = z.terms[static_cast<size_t>(n - z.lo)];
        const FormalSum& tgt = z.terms[static_cast<size_t>(n - 1 - z.lo)];
        AMor d = cat.zero_mor(src, tgt);
        AMor dx = cat.negate(complex_diff(cat, x, n - 1));
        AMor fm = cat.negate(chain_comp(cat, f, n - 1));
        AMor dy = complex_diff(cat, y, n);
        place_blocks(d, dx, 0, 0);
        place_blocks(d, fm, x.term(n - 2).size(), 0);
        place_blocks(d, dy, x.term(n - 2).size(), x.term(n - 1).size());
        z.diffs.push_back(std::move(d));
    }
    c.cone = z;
    c.incl = ChainMap{y, z, {}};
    for (int n = y.lo; n <= y.hi; ++n) {
        if (y.term(n).empty())
            continue;
        AMor m = cat.zero_mor(y.term(n), z.term(n));
        place_blocks(m, cat.identity_mor(y.term(n)), x.term(n - 1).size(), 0);
        c.incl.comps[n] = std::move(m);
    }
    Complex x1 = shift_complex(cat, x, 1);
    c.proj = ChainMap{z, x1, {}};
    for (int n = z.lo; n <= z.hi; ++n) {
        if (x.term(n - 1).empty())
            continue;
        AMor m = cat.zero_mor(z.term(n), x1.term(n));
        place_blocks(m, cat.identity_mor(x.term(n - 1)), 0, 0);
        c.proj.comps[n] = std::move(m);
    }
    return c;
}

Triangle cone_triangle(const CategoryPresentation& cat, const ChainMap& f)
{
    Cone c = cone(cat, f);
    return Triangle{f, c.incl, c.proj};
}

Triangle rotate_triangle(const CategoryPresentation& cat, const Triangle& t)
{
    ChainMap f1 = scale_chain(cat, shift_chain_map(cat, t.f, 1), -1);
    return Triangle{t.g, t.h, f1};
}

HomotopyPullback homotopy_pullback(const CategoryPresentation& cat, const ChainMap& p, const ChainMap& g)
{
    if (!(p.tgt == g.tgt))
        throw Error("homotopy pullback: targets differ");
    Complex xy = sum_complex(cat, p.src, g.src);
    ChainMap m{xy, p.tgt, {}};
    for (int n = xy.lo; n <= xy.hi; ++n) {
        if (xy.term(n).empty() || p.tgt.term(n).empty())
            continue;
        AMor a = cat.zero_mor(xy.term(n), p.tgt.term(n));
        place_blocks(a, chain_comp(cat, p, n), 0, 0);
        place_blocks(a, cat.negate(chain_comp(cat, g, n)), 0, p.src.term(n).size());
        if (!cat.is_zero_mor(a))
            m.comps[n] = std::move(a);
    }
    Cone c = cone(cat, m);
    Complex w = shift_complex(cat, c.cone, -1);
    HomotopyPullback hp;
    hp.w = w;
    hp.to_x = ChainMap{w, p.src, {}};
    hp.to_y = ChainMap{w, g.src, {}};
    for (int n = w.lo; n <= w.hi; ++n) {
        if (!p.src.term(n).empty()) {
            AMor a = cat.zero_mor(w.term(n), p.src.term(n));
            place_blocks(a, cat.identity_mor(p.src.term(n)), 0, 0);
            hp.to_x.comps[n] = std::move(a);
        }
        if (!g.src.term(n).empty()) {
            AMor a = cat.zero_mor(w.term(n), g.src.term(n));
            place_blocks(a, cat.identity_mor(g.src.term(n)), 0, p.src.term(n).size());
            hp.to_y.comps[n] = std::move(a);
        }
    }
    ChainMap first = scale_chain(cat, shift_chain_map(cat, c.proj, -1), -1);
    hp.triangle = Triangle{first, m, c.incl};
    return hp;
}

/* ---------------- homology ---------------- */

HomologyData apply_kunneth(const CategoryPresentation& cat, const FunctorData& h, const Complex& x)
{
    HomologyData hd;
    hd.x = x;
    for (int n = x.lo; n <= x.hi; ++n) {
        GradedSpace hn = h_space(cat, h, x.term(n));
        GradedMap dn = h_mor(cat, h, complex_diff(cat, x, n));
        GradedMap dn1 = h_mor(cat, h, complex_diff(cat, x, n + 1));
        for (auto& [dq, dim] : hn.dims) {
            Deg key{n, dq.q};
            hd.ambient[key] = dim;
            QMatrix z = kernel_basis(dn.block(dq));
            QMatrix b = column_basis(dn1.block(dq)).basis;
            QMatrix reps = quotient_basis(b, z);
            if (reps.cols > 0)
                hd.dims.set(key, reps.cols);
            hd.reps[key] = std::move(reps);
            hd.boundaries[key] = std::move(b);
        }
    }
    return hd;
}

QVec HomologyData::cycle_coords(const Deg& d, const QVec& v) const
{
    auto rit = reps.find(d);
    if (rit == reps.end()) {
        for (auto& e : v)
            if (e != 0)
                throw Error("cycle_coords: nonzero vector at a trivial bidegree");
        return {};
    }
    QMatrix sys = QMatrix::hstack(rit->second, boundaries.at(d));
    auto sol = solve(sys, v);
    if (!sol)
        throw Error("cycle_coords: vector is not a cycle modulo boundaries");
    return QVec(sol->begin(), sol->begin() + rit->second.cols);
}

GradedMap induced_map(const CategoryPresentation& cat, const FunctorData& h, const HomologyData& hx,
                      const HomologyData& hy, const ChainMap& f)
{
    GradedMap r = GradedMap::zero(hx.dims, hy.dims);
    for (auto& [d, k] : hx.dims.dims) {
        GradedMap fn = h_mor(cat, h, chain_comp(cat, f, d.n));
        QMatrix blk = fn.block(Deg{0, d.q});
        const QMatrix& reps = hx.reps.at(d);
        int tdim = hy.dims.dim(d);
        QMatrix out(tdim, k);
        for (int j = 0; j < k; ++j) {
            QVec v(static_cast<size_t>(reps.rows));
            for (int i = 0; i < reps.rows; ++i)
                v[static_cast<size_t>(i)] = reps.at(i, j);
            QVec w = blk.apply(v);
            QVec c = hy.cycle_coords(d, w);
            for (int i = 0; i < tdim; ++i)
                out.at(i, j) = c[static_cast<size_t>(i)];
        }
        if (!out.is_zero())
            r.blocks[d] = std::move(out);
    }
    return r;
}

GradedMap induced_map(const CategoryPresentation& cat, const FunctorData& h, const ChainMap& f)
{
    HomologyData hx = apply_kunneth(cat, h, f.src);
    HomologyData hy = apply_kunneth(cat, h, f.tgt);
    return induced_map(cat, h, hx, hy, f);
}

GradedMap kunneth_iso(const CategoryPresentation& cat, const FunctorData& h, const Complex& x, const Complex& y)
{
    HomologyData hx = apply_kunneth(cat, h, x);
    HomologyData hy = apply_kunneth(cat, h, y);
    Complex z = tensor_complex(cat, x, y);
    HomologyData hz = apply_kunneth(cat, h, z);
    GradedSpace src = tensor_graded(hx.dims, hy.dims);
    GradedMap r = GradedMap::zero(src, hz.dims);
    for (auto& [d, kd] : src.dims) {
        auto terms = tensor_layout(hx.dims, hy.dims, d);
        int tdim = hz.dims.dim(d);
        QMatrix out(tdim, kd);
        for (size_t col = 0; col < terms.size(); ++col) {
            Deg a = terms[col].a;
            Deg b{d.n - a.n, d.q - a.q};
            int p = a.n, s = b.n;
            const QMatrix& xreps = hx.reps.at(a);
            const QMatrix& yreps = hy.reps.at(b);
            GradedSpace hxa = h_space(cat, h, x.term(p));
            GradedSpace hyb = h_space(cat, h, y.term(s));
            GradedSpace tsp = tensor_graded(hxa, hyb);
            Deg inner{0, d.q};
            QVec tv(static_cast<size_t>(tsp.dim(inner)));
            for (int ii = 0; ii < xreps.rows; ++ii)
                for (int jj = 0; jj < yreps.rows; ++jj) {
                    Rat val = xreps.at(ii, terms[col].i) * yreps.at(jj, terms[col].j);
                    if (val == 0)
                        continue;
                    int pos = tensor_pos(hxa, hyb, Deg{0, a.q}, ii, Deg{0, b.q}, jj);
                    tv[static_cast<size_t>(pos)] += val;
                }
            GradedMap mu = h_mu(cat, h, x.term(p), y.term(s));
            QVec w = mu.block(inner).apply(tv);
            auto zoff = tensor_complex_offsets(cat, x, y, d.n);
            int slot0 = zoff.at(p);
            int off = h_offset(h, z.term(d.n), slot0, inner);
            QVec big(static_cast<size_t>(hz.ambient.count(d) ? hz.ambient.at(d) : 0));
            for (size_t i = 0; i < w.size(); ++i)
                big[static_cast<size_t>(off) + i] = w[i];
            QVec c = hz.cycle_coords(d, big);
            for (int i = 0; i < tdim; ++i)
                out.at(i, static_cast<int>(col)) = c[static_cast<size_t>(i)];
        }
        if (!out.is_zero())
            r.blocks[d] = std::move(out);
    }
    return r;
}

bool is_h_epi(const CategoryPresentation& cat, const FunctorData& h, const ChainMap& f)
{
    return induced_map(cat, h, f).is_surjective();
}

bool is_h_iso(const CategoryPresentation& cat, const FunctorData& h, const ChainMap& f)
{
    return induced_map(cat, h, f).is_iso();
}

SigmaExactReport verify_sigma_exact(const CategoryPresentation& cat, const FunctorData& h, const Triangle& t)
{
    SigmaExactReport rep;
    HomologyData ha = apply_kunneth(cat, h, t.f.src);
    HomologyData hb = apply_kunneth(cat, h, t.f.tgt);
    HomologyData hc = apply_kunneth(cat, h, t.g.tgt);
    GradedMap hf = induced_map(cat, h, ha, hb, t.f);
    GradedMap hp = induced_map(cat, h, hb, hc, t.g);
    rep.precondition_ok = hp.is_surjective();
    if (!rep.precondition_ok)
        throw Error("verify_sigma_exact: second map of the triangle is not an H-epimorphism");
    rep.exact = true;
    auto fail = [&](const Deg& d, const std::string& why) {
        rep.exact = false;
        rep.failures.push_back({d, why});
    };
    GradedSpace all = ha.dims;
    for (auto& [d, k] : hb.dims.dims)
        if (all.dim(d) < k)
            all.set(d, k);
    for (auto& [d, k] : hc.dims.dims)
        if (all.dim(d) < k)
            all.set(d, k);
    GradedMap comp = hp.compose(hf);
    for (auto& [d, k] : all.dims) {
        int da = ha.dims.dim(d), db = hb.dims.dim(d), dc = hc.dims.dim(d);
        if (rank(hf.block(d)) != da)
            fail(d, "first map not injective");
        if (rank(hp.block(d)) != dc)
            fail(d, "second map not surjective");
        if (!comp.block(d).is_zero())
            fail(d, "composite nonzero");
        if (da + dc != db)
            fail(d, "rank identity " + std::to_string(da) + "+" + std::to_string(dc) +
                        " != " + std::to_string(db));
    }
    return rep;
}

SameStrengthResult same_strength(const CategoryPresentation& cat, const FunctorData& h, const FunctorData& h2,
                                 const std::vector<Complex>& window)
{
    SameStrengthResult res;
    for (const Complex& x : window)
        for (const Complex& y : window) {
            KbHomSpace k = kb_hom(cat, x, y);
            if (k.dim() == 0)
                continue;
            auto stack = [&](const FunctorData& hh) {
                HomologyData hx = apply_kunneth(cat, hh, x);
                HomologyData hy = apply_kunneth(cat, hh, y);
                std::vector<QVec> cols;
                size_t rows = 0;
                for (const ChainMap& f : k.basis) {
                    GradedMap m = induced_map(cat, hh, hx, hy, f);
                    QVec flat;
                    for (auto& [d, kk] : hx.dims.dims) {
                        QMatrix blk = m.block(d);
                        for (int i = 0; i < blk.rows; ++i)
                            for (int j = 0; j < blk.cols; ++j)
                                flat.push_back(blk.at(i, j));
                    }
                    rows = flat.size();
                    cols.push_back(std::move(flat));
                }
                return QMatrix::from_cols(cols, static_cast<int>(rows));
            };
            QMatrix mh = stack(h);
            QMatrix mh2 = stack(h2);
            QMatrix k1 = kernel_basis(mh);
            QMatrix k2 = kernel_basis(mh2);
            if (!(k1 == k2)) {
                res.same = false;
                for (int j = 0; j < k1.cols; ++j) {
                    QVec v(static_cast<size_t>(k1.rows));
                    for (int i = 0; i < k1.rows; ++i)
                        v[static_cast<size_t>(i)] = k1.at(i, j);
                    if (k2.cols == 0 || !in_span(k2, v)) {
                        res.witness = k.from_coords(cat, v);
                        res.detail = "killed by " + h.name + " but not by " + h2.name;
                        return res;
                    }
                }
                for (int j = 0; j < k2.cols; ++j) {
                    QVec v(static_cast<size_t>(k2.rows));
                    for (int i = 0; i < k2.rows; ++i)
                        v[static_cast<size_t>(i)] = k2.at(i, j);
                    if (k1.cols == 0 || !in_span(k1, v)) {
                        res.witness = k.from_coords(cat, v);
                        res.detail = "killed by " + h2.name + " but not by " + h.name;
                        return res;
                    }
                }
            }
        }
    return res;
}

}  // namespace mhcat
