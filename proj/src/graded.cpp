#include "mhcat/graded.hpp"

#include <stdexcept>

namespace mhcat {

std::string deg_str(const Deg& d)
{
    return "(" + std::to_string(d.n) + "," + std::to_string(d.q) + ")";
}

void GradedSpace::set(const Deg& d, int k)
{
    if (k < 0)
        throw std::runtime_error("negative dimension");
    if (k == 0)
        dims.erase(d);
    else
        dims[d] = k;
}

int GradedSpace::total_dim() const
{
    int t = 0;
    for (auto& [d, k] : dims)
        t += k;
    return t;
}

GradedSpace GradedSpace::line(const Deg& d)
{
    GradedSpace v;
    v.set(d, 1);
    return v;
}

GradedSpace direct_sum(const GradedSpace& v, const GradedSpace& w)
{
    GradedSpace r = v;
    for (auto& [d, k] : w.dims)
        r.set(d, r.dim(d) + k);
    return r;
}

GradedSpace tensor_graded(const GradedSpace& v, const GradedSpace& w)
{
    GradedSpace r;
    for (auto& [a, ka] : v.dims)
        for (auto& [b, kb] : w.dims) {
            Deg d = a + b;
            r.set(d, r.dim(d) + ka * kb);
        }
    return r;
}

GradedSpace dual_graded(const GradedSpace& v)
{
    GradedSpace r;
    for (auto& [d, k] : v.dims)
        r.set(-d, k);
    return r;
}

std::vector<TensorTerm> tensor_layout(const GradedSpace& v, const GradedSpace& w, const Deg& d)
{
    std::vector<TensorTerm> terms;
    for (auto& [a, ka] : v.dims) {
        Deg b{d.n - a.n, d.q - a.q};
        int kb = w.dim(b);
        if (kb == 0)
            continue;
        for (int i = 0; i < ka; ++i)
            for (int j = 0; j < kb; ++j)
                terms.push_back({a, i, j});
    }
    return terms;
}

int tensor_pos(const GradedSpace& v, const GradedSpace& w, const Deg& a, int i, const Deg& b, int j)
{
    Deg d = a + b;
    int pos = 0;
    for (auto& [aa, ka] : v.dims) {
        if (aa == a)
            break;
        Deg bb{d.n - aa.n, d.q - aa.q};
        pos += ka * w.dim(bb);
    }
    return pos + i * w.dim(b) + j;
}

GradedMap GradedMap::identity(const GradedSpace& v)
{
    GradedMap f{v, v, {}};
    for (auto& [d, k] : v.dims)
        f.blocks[d] = QMatrix::identity(k);
    return f;
}

QMatrix GradedMap::block(const Deg& d) const
{
    auto it = blocks.find(d);
    if (it != blocks.end())
        return it->second;
    return QMatrix::zero(tgt.dim(d), src.dim(d));
}

void GradedMap::set_block(const Deg& d, QMatrix m)
{
    if (m.rows != tgt.dim(d) || m.cols != src.dim(d))
        throw std::runtime_error("graded block shape mismatch at " + deg_str(d));
    if (m.is_zero())
        blocks.erase(d);
    else
        blocks[d] = std::move(m);
}

GradedMap GradedMap::compose(const GradedMap& inner) const
{
    if (!(inner.tgt == src))
        throw std::runtime_error("graded compose mismatch");
    GradedMap r{inner.src, tgt, {}};
    for (auto& [d, m] : inner.blocks) {
        if (tgt.dim(d) == 0)
            continue;
        QMatrix prod = block(d) * m;
        if (!prod.is_zero())
            r.blocks[d] = std::move(prod);
    }
    return r;
}

GradedMap GradedMap::operator+(const GradedMap& o) const
{
    if (!(src == o.src) || !(tgt == o.tgt))
        throw std::runtime_error("graded sum mismatch");
    GradedMap r{src, tgt, {}};
    for (auto& [d, m] : blocks)
        r.blocks[d] = m;
    for (auto& [d, m] : o.blocks) {
        auto it = r.blocks.find(d);
        QMatrix s = it == r.blocks.end() ? m : it->second + m;
        if (s.is_zero())
            r.blocks.erase(d);
        else
            r.blocks[d] = std::move(s);
    }
    return r;
}

GradedMap GradedMap::operator-(const GradedMap& o) const
{
    return *this + o.scaled(-1);
}

GradedMap GradedMap::scaled(const Rat& c) const
{
    GradedMap r{src, tgt, {}};
    if (c == 0)
        return r;
    for (auto& [d, m] : blocks)
        r.blocks[d] = m.scaled(c);
    return r;
}

bool GradedMap::is_zero() const
{
    for (auto& [d, m] : blocks)
        if (!m.is_zero())
            return false;
    return true;
}

bool GradedMap::is_iso() const
{
    for (auto& [d, k] : src.dims)
        if (tgt.dim(d) != k)
            return false;
    for (auto& [d, k] : tgt.dims)
        if (src.dim(d) != k)
            return false;
    for (auto& [d, k] : src.dims)
        if (rank(block(d)) != k)
            return false;
    return true;
}

bool GradedMap::is_injective() const
{
    for (auto& [d, k] : src.dims)
        if (rank(block(d)) != k)
            return false;
    return true;
}

bool GradedMap::is_surjective() const
{
    for (auto& [d, k] : tgt.dims)
        if (rank(block(d)) != k)
            return false;
    return true;
}

bool GradedMap::operator==(const GradedMap& o) const
{
    if (!(src == o.src) || !(tgt == o.tgt))
        return false;
    return (*this - o).is_zero();
}

std::optional<GradedMap> GradedMap::inverse() const
{
    if (!is_iso())
        return std::nullopt;
    GradedMap r{tgt, src, {}};
    for (auto& [d, k] : src.dims) {
        auto inv = mhcat::inverse(block(d));
        if (!inv)
            return std::nullopt;
        if (!inv->is_zero())
            r.blocks[d] = *inv;
    }
    return r;
}

GradedMap tensor_map(const GradedMap& f, const GradedMap& g)
{
    GradedSpace s = tensor_graded(f.src, g.src);
    GradedSpace t = tensor_graded(f.tgt, g.tgt);
    GradedMap r{s, t, {}};
    std::map<Deg, QMatrix> fb, gb;
    for (auto& [a, k] : f.src.dims)
        fb[a] = f.block(a);
    for (auto& [b, k] : g.src.dims)
        gb[b] = g.block(b);
    for (auto& [d, kd] : s.dims) {
        if (t.dim(d) == 0)
            continue;
        auto sl = tensor_layout(f.src, g.src, d);
        auto tl = tensor_layout(f.tgt, g.tgt, d);
        QMatrix m(t.dim(d), kd);
        bool nonzero = false;
        // Degree-preserving maps: source term (a,i,j) only hits target terms
        // with the same left degree a.
        for (size_t col = 0; col < sl.size(); ++col) {
            const Deg& a = sl[col].a;
            Deg b{d.n - a.n, d.q - a.q};
            const QMatrix& fm = fb.at(a);
            const QMatrix& gm = gb.at(b);
            for (size_t row = 0; row < tl.size(); ++row) {
                if (!(tl[row].a == a))
                    continue;
                Rat val = fm.at(tl[row].i, sl[col].i) * gm.at(tl[row].j, sl[col].j);
                if (val != 0) {
                    m.at(static_cast<int>(row), static_cast<int>(col)) = val;
                    nonzero = true;
                }
            }
        }
        if (nonzero)
            r.blocks[d] = std::move(m);
    }
    return r;
}

GradedMap koszul_symmetry(const GradedSpace& v, const GradedSpace& w, const GradingConvention& conv)
{
    GradedSpace s = tensor_graded(v, w);
    GradedSpace t = tensor_graded(w, v);
    GradedMap r{s, t, {}};
    for (auto& [d, kd] : s.dims) {
        auto sl = tensor_layout(v, w, d);
        QMatrix m(t.dim(d), kd);
        for (size_t col = 0; col < sl.size(); ++col) {
            const Deg& a = sl[col].a;
            Deg b{d.n - a.n, d.q - a.q};
            int row = tensor_pos(w, v, b, sl[col].j, a, sl[col].i);
            m.at(row, static_cast<int>(col)) = conv.koszul_sign(a, b);
        }
        r.blocks[d] = std::move(m);
    }
    return r;
}

}  // namespace mhcat
