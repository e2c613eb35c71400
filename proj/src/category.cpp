#include "mhcat/category.hpp"

#include <algorithm>

namespace mhcat {

FormalSum FormalSum::concat(const FormalSum& a, const FormalSum& b)
{
    FormalSum r = a;
    r.slots.insert(r.slots.end(), b.slots.begin(), b.slots.end());
    return r;
}

ObjId CategoryPresentation::object_id(const std::string& name) const
{
    for (size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == name)
            return static_cast<ObjId>(i);
    throw Error("unknown object label: " + name);
}

const FormalSum& CategoryPresentation::tensor_of(ObjId a, ObjId b) const
{
    auto it = tensor_obj.find({a, b});
    if (it == tensor_obj.end())
        throw Error("tensor not presented for pair (" + objects[a] + ", " + objects[b] + ")");
    return it->second;
}

bool CategoryPresentation::tensor_defined_fs(const FormalSum& s, const FormalSum& t) const
{
    for (ObjId a : s.slots)
        for (ObjId b : t.slots)
            if (!tensor_defined(a, b))
                return false;
    return true;
}

/* Group layout of s⊗t: slot ranges of tensor_of(s_j, t_k), lex in (j, k). */
namespace {
struct TensorFsLayout {
    FormalSum result;
    std::vector<std::vector<int>> group_off;  // [s slot][t slot]
};

TensorFsLayout tensor_fs_layout(const CategoryPresentation& cat, const FormalSum& s, const FormalSum& t)
{
    TensorFsLayout l;
    l.group_off.assign(s.slots.size(), std::vector<int>(t.slots.size(), 0));
    for (size_t j = 0; j < s.slots.size(); ++j)
        for (size_t k = 0; k < t.slots.size(); ++k) {
            l.group_off[j][k] = l.result.size();
            const FormalSum& prod = cat.tensor_of(s.slots[j], t.slots[k]);
            l.result = FormalSum::concat(l.result, prod);
        }
    return l;
}
}  // namespace

FormalSum CategoryPresentation::tensor_fs(const FormalSum& s, const FormalSum& t) const
{
    return tensor_fs_layout(*this, s, t).result;
}

std::vector<std::vector<int>> CategoryPresentation::tensor_fs_offsets(const FormalSum& s, const FormalSum& t) const
{
    return tensor_fs_layout(*this, s, t).group_off;
}

FormalSum CategoryPresentation::dual_fs(const FormalSum& s) const
{
    FormalSum r;
    for (ObjId a : s.slots) {
        if (!dual_obj[a])
            throw Error("missing duality datum for object " + objects[a]);
        r.slots.push_back(*dual_obj[a]);
    }
    return r;
}

bool CategoryPresentation::dual_defined_fs(const FormalSum& s) const
{
    for (ObjId a : s.slots)
        if (!dual_obj[a] || !coev.count(a) || !ev.count(a))
            return false;
    return true;
}

const QVec& CategoryPresentation::compose_basis(ObjId a, ObjId b, ObjId c, int f, int g) const
{
    auto it = compose_table.find({a, b, c});
    if (it == compose_table.end())
        throw Error("missing composition table (" + objects[a] + "," + objects[b] + "," + objects[c] + ")");
    return it->second[static_cast<size_t>(f) * hom_dims[b][c] + g];
}

const AMor& CategoryPresentation::tensor_basis(ObjId a, ObjId b, ObjId a2, ObjId b2, int f, int g) const
{
    auto it = tensor_mor.find({a, b, a2, b2});
    if (it == tensor_mor.end())
        throw Error("missing tensor structure constants (" + objects[a] + "," + objects[b] + ") -> (" +
                    objects[a2] + "," + objects[b2] + ")");
    return it->second[static_cast<size_t>(f) * hom_dims[b][b2] + g];
}

AMor CategoryPresentation::zero_mor(const FormalSum& s, const FormalSum& t) const
{
    AMor m;
    m.src = s;
    m.tgt = t;
    m.blocks.assign(t.slots.size(), {});
    for (size_t i = 0; i < t.slots.size(); ++i) {
        m.blocks[i].resize(s.slots.size());
        for (size_t j = 0; j < s.slots.size(); ++j)
            m.blocks[i][j].assign(hom_dims[s.slots[j]][t.slots[i]], Rat(0));
    }
    return m;
}

AMor CategoryPresentation::identity_mor(const FormalSum& s) const
{
    AMor m = zero_mor(s, s);
    for (size_t i = 0; i < s.slots.size(); ++i)
        m.blocks[i][i] = identity_coords[s.slots[i]];
    return m;
}

AMor CategoryPresentation::compose(const AMor& g, const AMor& f) const
{
    if (!(g.src == f.tgt))
        throw Error("compose: morphisms not composable");
    AMor r = zero_mor(f.src, g.tgt);
    for (size_t i = 0; i < g.tgt.slots.size(); ++i)
        for (size_t k = 0; k < f.src.slots.size(); ++k) {
            QVec& out = r.blocks[i][k];
            for (size_t j = 0; j < f.tgt.slots.size(); ++j) {
                const QVec& fv = f.blocks[j][k];
                const QVec& gv = g.blocks[i][j];
                for (size_t p = 0; p < fv.size(); ++p) {
                    if (fv[p] == 0)
                        continue;
                    for (size_t q = 0; q < gv.size(); ++q) {
                        if (gv[q] == 0)
                            continue;
                        const QVec& comp = compose_basis(f.src.slots[k], f.tgt.slots[j], g.tgt.slots[i],
                                                         static_cast<int>(p), static_cast<int>(q));
                        Rat c = fv[p] * gv[q];
                        for (size_t r2 = 0; r2 < out.size(); ++r2)
                            if (comp[r2] != 0)
                                out[r2] += c * comp[r2];
                    }
                }
            }
        }
    return r;
}

AMor CategoryPresentation::add(const AMor& f, const AMor& g) const
{
    if (!(f.src == g.src) || !(f.tgt == g.tgt))
        throw Error("add: shape mismatch");
    AMor r = f;
    for (size_t i = 0; i < r.blocks.size(); ++i)
        for (size_t j = 0; j < r.blocks[i].size(); ++j)
            for (size_t k = 0; k < r.blocks[i][j].size(); ++k)
                r.blocks[i][j][k] += g.blocks[i][j][k];
    return r;
}

AMor CategoryPresentation::scale(const AMor& f, const Rat& c) const
{
    AMor r = f;
    for (auto& row : r.blocks)
        for (auto& v : row)
            for (auto& x : v)
                x *= c;
    return r;
}

bool CategoryPresentation::is_zero_mor(const AMor& f) const
{
    for (auto& row : f.blocks)
        for (auto& v : row)
            for (auto& x : v)
                if (x != 0)
                    return false;
    return true;
}

AMor CategoryPresentation::tensor(const AMor& f, const AMor& g) const
{
    TensorFsLayout src_l = tensor_fs_layout(*this, f.src, g.src);
    TensorFsLayout tgt_l = tensor_fs_layout(*this, f.tgt, g.tgt);
    AMor r = zero_mor(src_l.result, tgt_l.result);
    for (size_t js = 0; js < f.src.slots.size(); ++js)
        for (size_t ks = 0; ks < g.src.slots.size(); ++ks)
            for (size_t jt = 0; jt < f.tgt.slots.size(); ++jt)
                for (size_t kt = 0; kt < g.tgt.slots.size(); ++kt) {
                    const QVec& fv = f.blocks[jt][js];
                    const QVec& gv = g.blocks[kt][ks];
                    int so = src_l.group_off[js][ks];
                    int to = tgt_l.group_off[jt][kt];
                    for (size_t p = 0; p < fv.size(); ++p) {
                        if (fv[p] == 0)
                            continue;
                        for (size_t q = 0; q < gv.size(); ++q) {
                            if (gv[q] == 0)
                                continue;
                            const AMor& basis = tensor_basis(f.src.slots[js], g.src.slots[ks],
                                                             f.tgt.slots[jt], g.tgt.slots[kt],
                                                             static_cast<int>(p), static_cast<int>(q));
                            Rat c = fv[p] * gv[q];
                            for (int bi = 0; bi < basis.tgt.size(); ++bi)
                                for (int bj = 0; bj < basis.src.size(); ++bj) {
                                    const QVec& bv = basis.blocks[static_cast<size_t>(bi)][static_cast<size_t>(bj)];
                                    QVec& out = r.blocks[static_cast<size_t>(to + bi)][static_cast<size_t>(so + bj)];
                                    for (size_t k = 0; k < bv.size(); ++k)
                                        if (bv[k] != 0)
                                            out[k] += c * bv[k];
                                }
                        }
                    }
                }
    return r;
}

AMor CategoryPresentation::symmetry_fs(const FormalSum& s, const FormalSum& t) const
{
    TensorFsLayout st = tensor_fs_layout(*this, s, t);
    TensorFsLayout ts = tensor_fs_layout(*this, t, s);
    AMor r = zero_mor(st.result, ts.result);
    for (size_t j = 0; j < s.slots.size(); ++j)
        for (size_t k = 0; k < t.slots.size(); ++k) {
            auto it = symmetry.find({s.slots[j], t.slots[k]});
            if (it == symmetry.end())
                throw Error("missing symmetry datum (" + objects[s.slots[j]] + "," + objects[t.slots[k]] + ")");
            const AMor& sig = it->second;
            int so = st.group_off[j][k];
            int to = ts.group_off[k][j];
            for (int bi = 0; bi < sig.tgt.size(); ++bi)
                for (int bj = 0; bj < sig.src.size(); ++bj)
                    r.blocks[static_cast<size_t>(to + bi)][static_cast<size_t>(so + bj)] =
                        sig.blocks[static_cast<size_t>(bi)][static_cast<size_t>(bj)];
        }
    return r;
}

AMor CategoryPresentation::coev_fs(const FormalSum& s) const
{
    FormalSum sd = dual_fs(s);
    TensorFsLayout l = tensor_fs_layout(*this, s, sd);
    AMor r = zero_mor(FormalSum::single(unit), l.result);
    for (size_t j = 0; j < s.slots.size(); ++j) {
        auto it = coev.find(s.slots[j]);
        if (it == coev.end())
            throw Error("missing coevaluation for object " + objects[s.slots[j]]);
        const AMor& cv = it->second;
        int to = l.group_off[j][j];
        for (int bi = 0; bi < cv.tgt.size(); ++bi)
            r.blocks[static_cast<size_t>(to + bi)][0] = cv.blocks[static_cast<size_t>(bi)][0];
    }
    return r;
}

AMor CategoryPresentation::ev_fs(const FormalSum& s) const
{
    FormalSum sd = dual_fs(s);
    TensorFsLayout l = tensor_fs_layout(*this, sd, s);
    AMor r = zero_mor(l.result, FormalSum::single(unit));
    for (size_t j = 0; j < s.slots.size(); ++j) {
        auto it = ev.find(s.slots[j]);
        if (it == ev.end())
            throw Error("missing evaluation for object " + objects[s.slots[j]]);
        const AMor& e = it->second;
        int so = l.group_off[j][j];
        for (int bj = 0; bj < e.src.size(); ++bj)
            r.blocks[0][static_cast<size_t>(so + bj)] = e.blocks[0][static_cast<size_t>(bj)];
    }
    return r;
}

AMor CategoryPresentation::transpose_mor(const AMor& f) const
{
    FormalSum sd = dual_fs(f.src);
    FormalSum td = dual_fs(f.tgt);
    // f^ = (ev_T ⊗ id_{S^}) ∘ (id_{T^} ⊗ f ⊗ id_{S^}) ∘ (id_{T^} ⊗ coev_S)
    AMor step1 = tensor(identity_mor(td), coev_fs(f.src));
    AMor mid = tensor(identity_mor(td), tensor(f, identity_mor(sd)));
    AMor step3 = tensor(ev_fs(f.tgt), identity_mor(sd));
    return compose(step3, compose(mid, step1));
}

int CategoryPresentation::hom_flat_dim(const FormalSum& s, const FormalSum& t) const
{
    int d = 0;
    for (ObjId b : t.slots)
        for (ObjId a : s.slots)
            d += hom_dims[a][b];
    return d;
}

QVec CategoryPresentation::flatten(const AMor& f) const
{
    QVec v;
    v.reserve(static_cast<size_t>(hom_flat_dim(f.src, f.tgt)));
    for (auto& row : f.blocks)
        for (auto& e : row)
            v.insert(v.end(), e.begin(), e.end());
    return v;
}

AMor CategoryPresentation::unflatten(const FormalSum& s, const FormalSum& t, const QVec& v) const
{
    AMor m = zero_mor(s, t);
    size_t pos = 0;
    for (auto& row : m.blocks)
        for (auto& e : row)
            for (auto& x : e) {
                if (pos >= v.size())
                    throw Error("unflatten: vector too short");
                x = v[pos++];
            }
    if (pos != v.size())
        throw Error("unflatten: vector too long");
    return m;
}

AMor CategoryPresentation::basis_mor(const FormalSum& s, const FormalSum& t, int flat_index) const
{
    QVec v(static_cast<size_t>(hom_flat_dim(s, t)), Rat(0));
    v[static_cast<size_t>(flat_index)] = 1;
    return unflatten(s, t, v);
}

QMatrix CategoryPresentation::compose_left_matrix(const AMor& g, const FormalSum& s) const
{
    int n = hom_flat_dim(s, g.src);
    int m = hom_flat_dim(s, g.tgt);
    QMatrix out(m, n);
    for (int k = 0; k < n; ++k) {
        QVec col = flatten(compose(g, basis_mor(s, g.src, k)));
        for (int i = 0; i < m; ++i)
            out.at(i, k) = col[static_cast<size_t>(i)];
    }
    return out;
}

QMatrix CategoryPresentation::compose_right_matrix(const AMor& g, const FormalSum& t) const
{
    int n = hom_flat_dim(g.tgt, t);
    int m = hom_flat_dim(g.src, t);
    QMatrix out(m, n);
    for (int k = 0; k < n; ++k) {
        QVec col = flatten(compose(basis_mor(g.tgt, t, k), g));
        for (int i = 0; i < m; ++i)
            out.at(i, k) = col[static_cast<size_t>(i)];
    }
    return out;
}

std::string CategoryPresentation::describe(const FormalSum& s) const
{
    if (s.empty())
        return "0";
    std::string r;
    for (size_t i = 0; i < s.slots.size(); ++i) {
        if (i)
            r += "+";
        r += objects[s.slots[i]];
    }
    return r;
}

const GradedMap& FunctorData::mor(ObjId a, ObjId b, int k) const
{
    auto it = on_mor.find({a, b});
    if (it == on_mor.end())
        throw Error("functor missing data on a hom space");
    return it->second[static_cast<size_t>(k)];
}

GradedSpace h_space(const CategoryPresentation& cat, const FunctorData& h, const FormalSum& s)
{
    (void)cat;
    GradedSpace v;
    for (ObjId a : s.slots)
        v = direct_sum(v, h.on_obj[a]);
    return v;
}

namespace {
/* Offsets of each slot's H-space inside H(s) at a fixed degree. */
std::vector<int> slot_offsets(const FunctorData& h, const FormalSum& s, const Deg& d)
{
    std::vector<int> off(s.slots.size() + 1, 0);
    for (size_t j = 0; j < s.slots.size(); ++j)
        off[j + 1] = off[j] + h.on_obj[s.slots[j]].dim(d);
    return off;
}
}  // namespace

int h_offset(const FunctorData& h, const FormalSum& s, int first, const Deg& d)
{
    int off = 0;
    for (int j = 0; j < first; ++j)
        off += h.on_obj[s.slots[static_cast<size_t>(j)]].dim(d);
    return off;
}

GradedMap h_mor(const CategoryPresentation& cat, const FunctorData& h, const AMor& f)
{
    GradedSpace hs = h_space(cat, h, f.src);
    GradedSpace ht = h_space(cat, h, f.tgt);
    GradedMap r = GradedMap::zero(hs, ht);
    std::map<Deg, QMatrix> work;
    for (auto& [d, kd] : hs.dims) {
        if (ht.dim(d) == 0)
            continue;
        work[d] = QMatrix(ht.dim(d), kd);
    }
    for (size_t i = 0; i < f.tgt.slots.size(); ++i)
        for (size_t j = 0; j < f.src.slots.size(); ++j) {
            const QVec& coords = f.blocks[i][j];
            for (size_t k = 0; k < coords.size(); ++k) {
                if (coords[k] == 0)
                    continue;
                const GradedMap& m = h.mor(f.src.slots[j], f.tgt.slots[i], static_cast<int>(k));
                for (auto& [d, blk] : m.blocks) {
                    auto it = work.find(d);
                    if (it == work.end())
                        continue;
                    int ro = slot_offsets(h, f.tgt, d)[i];
                    int co = slot_offsets(h, f.src, d)[j];
                    for (int r2 = 0; r2 < blk.rows; ++r2)
                        for (int c2 = 0; c2 < blk.cols; ++c2)
                            if (blk.at(r2, c2) != 0)
                                it->second.at(ro + r2, co + c2) += coords[k] * blk.at(r2, c2);
                }
            }
        }
    for (auto& [d, m] : work)
        if (!m.is_zero())
            r.blocks[d] = std::move(m);
    return r;
}

GradedMap h_mu(const CategoryPresentation& cat, const FunctorData& h, const FormalSum& s, const FormalSum& t)
{
    TensorFsLayout layout = tensor_fs_layout(cat, s, t);
    GradedSpace hs = h_space(cat, h, s);
    GradedSpace ht = h_space(cat, h, t);
    GradedSpace src = tensor_graded(hs, ht);
    GradedSpace tgt = h_space(cat, h, layout.result);
    GradedMap r = GradedMap::zero(src, tgt);
    for (auto& [d, kd] : src.dims) {
        if (tgt.dim(d) == 0)
            continue;
        QMatrix m(tgt.dim(d), kd);
        auto terms = tensor_layout(hs, ht, d);
        auto tgt_off = slot_offsets(h, layout.result, d);
        for (size_t col = 0; col < terms.size(); ++col) {
            Deg a = terms[col].a;
            Deg b{d.n - a.n, d.q - a.q};
            auto s_off = slot_offsets(h, s, a);
            auto t_off = slot_offsets(h, t, b);
            size_t js = 0;
            while (terms[col].i >= s_off[js + 1])
                ++js;
            size_t jt = 0;
            while (terms[col].j >= t_off[jt + 1])
                ++jt;
            int p = terms[col].i - s_off[js];
            int q = terms[col].j - t_off[jt];
            ObjId oa = s.slots[js], ob = t.slots[jt];
            auto mu_it = h.mu.find({oa, ob});
            if (mu_it == h.mu.end())
                throw Error("functor missing mu for pair (" + cat.objects[oa] + "," + cat.objects[ob] + ")");
            const GradedMap& mu = mu_it->second;
            const GradedSpace& ha = h.on_obj[oa];
            const GradedSpace& hb = h.on_obj[ob];
            int small_col = tensor_pos(ha, hb, a, p, b, q);
            QMatrix blk = mu.block(d);
            const FormalSum& prod = cat.tensor_of(oa, ob);
            auto prod_off = slot_offsets(h, prod, d);
            int group = layout.group_off[js][jt];
            for (size_t mslot = 0; mslot < prod.slots.size(); ++mslot) {
                int rows_here = h.on_obj[prod.slots[mslot]].dim(d);
                for (int r2 = 0; r2 < rows_here; ++r2) {
                    const Rat& v = blk.at(prod_off[mslot] + r2, small_col);
                    if (v != 0)
                        m.at(tgt_off[static_cast<size_t>(group) + mslot] + r2, static_cast<int>(col)) = v;
                }
            }
        }
        if (!m.is_zero())
            r.blocks[d] = std::move(m);
    }
    return r;
}

/* ---------------- validation ---------------- */

namespace {
void structural_check(const CategoryPresentation& cat)
{
    int n = cat.n_objects();
    if (cat.unit < 0 || cat.unit >= n)
        throw Error("unit object out of range");
    if (static_cast<int>(cat.hom_dims.size()) != n)
        throw Error("hom_dims shape mismatch");
    for (auto& row : cat.hom_dims)
        if (static_cast<int>(row.size()) != n)
            throw Error("hom_dims shape mismatch");
    if (static_cast<int>(cat.identity_coords.size()) != n)
        throw Error("identity coordinate table shape mismatch");
    for (int a = 0; a < n; ++a)
        if (static_cast<int>(cat.identity_coords[a].size()) != static_cast<size_t>(cat.hom_dims[a][a]))
            throw Error("identity coordinates shape mismatch for " + cat.objects[a]);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (cat.hom_dims[a][b] == 0 || cat.hom_dims[b][c] == 0)
                    continue;
                auto it = cat.compose_table.find({a, b, c});
                if (it == cat.compose_table.end())
                    throw Error("missing composition table (" + cat.objects[a] + "," + cat.objects[b] + "," +
                                cat.objects[c] + ")");
                if (static_cast<int>(it->second.size()) != cat.hom_dims[a][b] * cat.hom_dims[b][c])
                    throw Error("composition table shape mismatch");
                for (auto& v : it->second)
                    if (static_cast<int>(v.size()) != cat.hom_dims[a][c])
                        throw Error("composition table entry shape mismatch");
            }
    if (static_cast<int>(cat.dual_obj.size()) != n)
        throw Error("dual table shape mismatch");
    for (auto& [key, fs] : cat.tensor_obj)
        for (ObjId x : fs.slots)
            if (x < 0 || x >= n)
                throw Error("tensor target out of range");
    for (auto& [key, tab] : cat.tensor_mor) {
        auto [a, b, a2, b2] = key;
        if (!cat.tensor_defined(a, b) || !cat.tensor_defined(a2, b2))
            throw Error("tensor structure constants for unpresented product");
        if (static_cast<int>(tab.size()) != cat.hom_dims[a][a2] * cat.hom_dims[b][b2])
            throw Error("tensor structure constant table shape mismatch");
    }
}
}  // namespace

ValidationReport validate_presentation(const CategoryPresentation& cat)
{
    structural_check(cat);
    ValidationReport rep;
    int n = cat.n_objects();
    auto issue = [&](const std::string& ax, const std::string& det) { rep.issues.push_back({ax, det}); };

    // unitality and associativity of composition
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int d = cat.hom_dims[a][b];
            for (int f = 0; f < d; ++f) {
                AMor fm = cat.basis_mor(FormalSum::single(a), FormalSum::single(b), f);
                if (!(cat.compose(fm, cat.identity_mor(FormalSum::single(a))) == fm))
                    issue("unitality", "f∘id != f for basis " + std::to_string(f) + " of hom(" + cat.objects[a] +
                                           "," + cat.objects[b] + ")");
                if (!(cat.compose(cat.identity_mor(FormalSum::single(b)), fm) == fm))
                    issue("unitality", "id∘f != f for basis " + std::to_string(f) + " of hom(" + cat.objects[a] +
                                           "," + cat.objects[b] + ")");
            }
        }
    for (int a = 0; a < n && rep.issues.size() < 64; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d2 = 0; d2 < n; ++d2) {
                    if (!cat.hom_dims[a][b] || !cat.hom_dims[b][c] || !cat.hom_dims[c][d2])
                        continue;
                    for (int f = 0; f < cat.hom_dims[a][b]; ++f)
                        for (int g = 0; g < cat.hom_dims[b][c]; ++g)
                            for (int h2 = 0; h2 < cat.hom_dims[c][d2]; ++h2) {
                                AMor fm = cat.basis_mor(FormalSum::single(a), FormalSum::single(b), f);
                                AMor gm = cat.basis_mor(FormalSum::single(b), FormalSum::single(c), g);
                                AMor hm = cat.basis_mor(FormalSum::single(c), FormalSum::single(d2), h2);
                                if (!(cat.compose(hm, cat.compose(gm, fm)) == cat.compose(cat.compose(hm, gm), fm)))
                                    issue("associativity", "basis (" + std::to_string(f) + "," + std::to_string(g) +
                                                               "," + std::to_string(h2) + ") at (" + cat.objects[a] +
                                                               "," + cat.objects[b] + "," + cat.objects[c] + "," +
                                                               cat.objects[d2] + ")");
                            }
                }

    // strict unit on objects and morphisms
    for (int a = 0; a < n; ++a) {
        if (cat.tensor_defined(cat.unit, a) && !(cat.tensor_of(cat.unit, a) == FormalSum::single(a)))
            issue("strict-unit", "1⊗" + cat.objects[a] + " not presented as " + cat.objects[a]);
        if (cat.tensor_defined(a, cat.unit) && !(cat.tensor_of(a, cat.unit) == FormalSum::single(a)))
            issue("strict-unit", cat.objects[a] + "⊗1 not presented as " + cat.objects[a]);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!cat.hom_dims[a][b])
                continue;
            if (cat.tensor_defined(cat.unit, a) && cat.tensor_defined(cat.unit, b)) {
                for (int f = 0; f < cat.hom_dims[a][b]; ++f) {
                    AMor fm = cat.basis_mor(FormalSum::single(a), FormalSum::single(b), f);
                    AMor lhs = cat.tensor(cat.identity_mor(FormalSum::single(cat.unit)), fm);
                    if (!(lhs == fm))
                        issue("strict-unit", "id_1⊗f != f on hom(" + cat.objects[a] + "," + cat.objects[b] + ")");
                }
            }
            if (cat.tensor_defined(a, cat.unit) && cat.tensor_defined(b, cat.unit)) {
                for (int f = 0; f < cat.hom_dims[a][b]; ++f) {
                    AMor fm = cat.basis_mor(FormalSum::single(a), FormalSum::single(b), f);
                    AMor rhs = cat.tensor(fm, cat.identity_mor(FormalSum::single(cat.unit)));
                    if (!(rhs == fm))
                        issue("strict-unit", "f⊗id_1 != f on hom(" + cat.objects[a] + "," + cat.objects[b] + ")");
                }
            }
        }

    // strict associativity on objects (checked where all products are presented)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!cat.tensor_defined(a, b))
                continue;
            for (int c = 0; c < n; ++c) {
                if (!cat.tensor_defined(b, c))
                    continue;
                const FormalSum& ab = cat.tensor_of(a, b);
                const FormalSum& bc = cat.tensor_of(b, c);
                if (!cat.tensor_defined_fs(ab, FormalSum::single(c)) ||
                    !cat.tensor_defined_fs(FormalSum::single(a), bc))
                    continue;
                if (!(cat.tensor_fs(ab, FormalSum::single(c)) == cat.tensor_fs(FormalSum::single(a), bc)))
                    issue("strict-associativity", "(" + cat.objects[a] + "⊗" + cat.objects[b] + ")⊗" +
                                                      cat.objects[c] + " != " + cat.objects[a] + "⊗(" +
                                                      cat.objects[b] + "⊗" + cat.objects[c] + ")");
            }
        }

    // tensor functoriality and identity preservation
    for (int a = 0; a < n && rep.issues.size() < 64; ++a)
        for (int b = 0; b < n; ++b) {
            if (!cat.tensor_defined(a, b))
                continue;
            AMor idt = cat.tensor(cat.identity_mor(FormalSum::single(a)), cat.identity_mor(FormalSum::single(b)));
            if (!(idt == cat.identity_mor(cat.tensor_of(a, b))))
                issue("tensor-identity", "id⊗id != id for (" + cat.objects[a] + "," + cat.objects[b] + ")");
            for (int a2 = 0; a2 < n; ++a2)
                for (int b2 = 0; b2 < n; ++b2) {
                    if (!cat.tensor_defined(a2, b2) || !cat.hom_dims[a][a2] || !cat.hom_dims[b][b2])
                        continue;
                    for (int a3 = 0; a3 < n; ++a3)
                        for (int b3 = 0; b3 < n; ++b3) {
                            if (!cat.tensor_defined(a3, b3) || !cat.hom_dims[a2][a3] || !cat.hom_dims[b2][b3])
                                continue;
                            for (int f = 0; f < cat.hom_dims[a][a2]; ++f)
                                for (int f2 = 0; f2 < cat.hom_dims[a2][a3]; ++f2)
                                    for (int g = 0; g < cat.hom_dims[b][b2]; ++g)
                                        for (int g2 = 0; g2 < cat.hom_dims[b2][b3]; ++g2) {
                                            AMor fm = cat.basis_mor(FormalSum::single(a), FormalSum::single(a2), f);
                                            AMor f2m = cat.basis_mor(FormalSum::single(a2), FormalSum::single(a3), f2);
                                            AMor gm = cat.basis_mor(FormalSum::single(b), FormalSum::single(b2), g);
                                            AMor g2m = cat.basis_mor(FormalSum::single(b2), FormalSum::single(b3), g2);
                                            AMor lhs = cat.compose(cat.tensor(f2m, g2m), cat.tensor(fm, gm));
                                            AMor rhs = cat.tensor(cat.compose(f2m, fm), cat.compose(g2m, gm));
                                            if (!(lhs == rhs))
                                                issue("tensor-functoriality",
                                                      "(g⊗g')∘(f⊗f') != (g∘f)⊗(g'∘f') at objects (" +
                                                          cat.objects[a] + "," + cat.objects[b] + ")");
                                        }
                        }
                }
        }

    // symmetry: involution, naturality, hexagon
    for (auto& [key, sig] : cat.symmetry) {
        auto [a, b] = key;
        auto rev = cat.symmetry.find({b, a});
        if (rev == cat.symmetry.end()) {
            issue("symmetry", "σ(" + cat.objects[b] + "," + cat.objects[a] + ") missing");
            continue;
        }
        if (!(cat.compose(rev->second, sig) == cat.identity_mor(cat.tensor_of(a, b))))
            issue("symmetry-involution", "σ_{b,a}∘σ_{a,b} != id for (" + cat.objects[a] + "," + cat.objects[b] + ")");
    }
    for (int a = 0; a < n && rep.issues.size() < 64; ++a)
        for (int b = 0; b < n; ++b) {
            if (!cat.symmetry.count({a, b}))
                continue;
            for (int a2 = 0; a2 < n; ++a2)
                for (int b2 = 0; b2 < n; ++b2) {
                    if (!cat.symmetry.count({a2, b2}) || !cat.hom_dims[a][a2] || !cat.hom_dims[b][b2])
                        continue;
                    for (int f = 0; f < cat.hom_dims[a][a2]; ++f)
                        for (int g = 0; g < cat.hom_dims[b][b2]; ++g) {
                            AMor fm = cat.basis_mor(FormalSum::single(a), FormalSum::single(a2), f);
                            AMor gm = cat.basis_mor(FormalSum::single(b), FormalSum::single(b2), g);
                            AMor lhs = cat.compose(cat.symmetry.at({a2, b2}), cat.tensor(fm, gm));
                            AMor rhs = cat.compose(cat.tensor(gm, fm), cat.symmetry.at({a, b}));
                            if (!(lhs == rhs))
                                issue("symmetry-naturality", "for basis pair on (" + cat.objects[a] + "," +
                                                                 cat.objects[b] + ")→(" + cat.objects[a2] + "," +
                                                                 cat.objects[b2] + ")");
                        }
                }
        }
    for (int x = 0; x < n && rep.issues.size() < 64; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (!cat.tensor_defined(y, z) || !cat.tensor_defined(x, y) || !cat.tensor_defined(x, z))
                    continue;
                const FormalSum yz = cat.tensor_of(y, z);
                const FormalSum xy = cat.tensor_of(x, y);
                FormalSum xs = FormalSum::single(x);
                FormalSum ys = FormalSum::single(y);
                FormalSum zs = FormalSum::single(z);
                bool ok = cat.tensor_defined_fs(xs, yz) && cat.tensor_defined_fs(yz, xs) &&
                          cat.tensor_defined_fs(xy, zs) && cat.tensor_defined_fs(ys, cat.tensor_of(x, z));
                if (!ok)
                    continue;
                bool have_sigma = true;
                for (ObjId w : yz.slots)
                    if (!cat.symmetry.count({x, w}))
                        have_sigma = false;
                if (!have_sigma || !cat.symmetry.count({x, y}) || !cat.symmetry.count({x, z}))
                    continue;
                AMor lhs = cat.symmetry_fs(xs, yz);
                AMor rhs = cat.compose(cat.tensor(cat.identity_mor(ys), cat.symmetry_fs(xs, zs)),
                                       cat.tensor(cat.symmetry_fs(xs, ys), cat.identity_mor(zs)));
                if (!(lhs == rhs))
                    issue("hexagon", "σ_{X,Y⊗Z} != (id⊗σ)(σ⊗id) at (" + cat.objects[x] + "," + cat.objects[y] +
                                         "," + cat.objects[z] + ")");
            }

    // duality zig-zags (a duality datum is dual object + coev + ev; a dual
    // object named without the unit/counit only supports dual_fs)
    for (int a = 0; a < n; ++a) {
        if (!cat.dual_obj[a])
            continue;
        if (cat.coev.count(a) != cat.ev.count(a)) {
            issue("duality", "object " + cat.objects[a] + " has only one of coev/ev");
            continue;
        }
        if (!cat.coev.count(a))
            continue;
        FormalSum as = FormalSum::single(a);
        FormalSum ad = FormalSum::single(*cat.dual_obj[a]);
        if (!cat.tensor_defined_fs(as, ad) || !cat.tensor_defined_fs(ad, as)) {
            issue("duality", "tensor products for zig-zag of " + cat.objects[a] + " not presented");
            continue;
        }
        AMor z1 = cat.compose(cat.tensor(cat.identity_mor(as), cat.ev_fs(as)),
                              cat.tensor(cat.coev_fs(as), cat.identity_mor(as)));
        if (!(z1 == cat.identity_mor(as)))
            issue("zig-zag", "(id⊗ev)(coev⊗id) != id for " + cat.objects[a]);
        AMor z2 = cat.compose(cat.tensor(cat.ev_fs(as), cat.identity_mor(ad)),
                              cat.tensor(cat.identity_mor(ad), cat.coev_fs(as)));
        if (!(z2 == cat.identity_mor(ad)))
            issue("zig-zag", "(ev⊗id)(id⊗coev) != id for " + cat.objects[a]);
    }

    return rep;
}

ValidationReport validate_functor(const CategoryPresentation& cat, const FunctorData& h)
{
    ValidationReport rep;
    int n = cat.n_objects();
    auto issue = [&](const std::string& ax, const std::string& det) { rep.issues.push_back({ax, det}); };
    if (static_cast<int>(h.on_obj.size()) != n)
        throw Error("functor object table shape mismatch");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!cat.hom_dims[a][b])
                continue;
            auto it = h.on_mor.find({a, b});
            if (it == h.on_mor.end() || static_cast<int>(it->second.size()) != cat.hom_dims[a][b])
                throw Error("functor missing data on hom(" + cat.objects[a] + "," + cat.objects[b] + ")");
            for (auto& m : it->second)
                if (!(m.src == h.on_obj[a]) || !(m.tgt == h.on_obj[b]))
                    throw Error("functor hom image shape mismatch on hom(" + cat.objects[a] + "," +
                                cat.objects[b] + ")");
        }

    for (int a = 0; a < n; ++a) {
        GradedMap ha = h_mor(cat, h, cat.identity_mor(FormalSum::single(a)));
        if (!(ha == GradedMap::identity(h.on_obj[a])))
            issue("functoriality", "H(id) != id on " + cat.objects[a]);
    }
    for (int a = 0; a < n && rep.issues.size() < 64; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (!cat.hom_dims[a][b] || !cat.hom_dims[b][c])
                    continue;
                for (int f = 0; f < cat.hom_dims[a][b]; ++f)
                    for (int g = 0; g < cat.hom_dims[b][c]; ++g) {
                        AMor fm = cat.basis_mor(FormalSum::single(a), FormalSum::single(b), f);
                        AMor gm = cat.basis_mor(FormalSum::single(b), FormalSum::single(c), g);
                        GradedMap lhs = h_mor(cat, h, cat.compose(gm, fm));
                        GradedMap rhs = h.mor(b, c, g).compose(h.mor(a, b, f));
                        if (!(lhs == rhs))
                            issue("functoriality", "H(g∘f) != H(g)H(f) on (" + cat.objects[a] + "," +
                                                       cat.objects[b] + "," + cat.objects[c] + ")");
                    }
            }

    GradedSpace qline = GradedSpace::line(Deg{0, 0});
    if (!(h.unit_iso.src == qline) || !(h.unit_iso.tgt == h.on_obj[cat.unit]) || !h.unit_iso.is_iso())
        issue("unit", "unit comparison Q→H(1) missing or not invertible");

    for (auto& [key, fs] : cat.tensor_obj) {
        auto [a, b] = key;
        auto it = h.mu.find({a, b});
        if (it == h.mu.end()) {
            issue("mu", "missing mu for (" + cat.objects[a] + "," + cat.objects[b] + ")");
            continue;
        }
        const GradedMap& mu = it->second;
        if (!(mu.src == tensor_graded(h.on_obj[a], h.on_obj[b])) || !(mu.tgt == h_space(cat, h, fs)))
            throw Error("mu shape mismatch for (" + cat.objects[a] + "," + cat.objects[b] + ")");
        if (!mu.is_iso())
            issue("mu", "mu not invertible for (" + cat.objects[a] + "," + cat.objects[b] + ")");
    }
    for (auto& [key, tab] : cat.tensor_mor) {
        if (rep.issues.size() >= 64)
            break;
        auto [a, b, a2, b2] = key;
        if (!h.mu.count({a, b}) || !h.mu.count({a2, b2}))
            continue;
        for (int f = 0; f < cat.hom_dims[a][a2]; ++f)
            for (int g = 0; g < cat.hom_dims[b][b2]; ++g) {
                const AMor& fg = tab[static_cast<size_t>(f) * cat.hom_dims[b][b2] + g];
                GradedMap lhs = h_mor(cat, h, fg).compose(h.mu.at({a, b}));
                GradedMap rhs = h.mu.at({a2, b2}).compose(tensor_map(h.mor(a, a2, f), h.mor(b, b2, g)));
                if (!(lhs == rhs))
                    issue("mu-naturality", "on basis (" + std::to_string(f) + "," + std::to_string(g) + ") of (" +
                                               cat.objects[a] + "," + cat.objects[b] + ")→(" + cat.objects[a2] +
                                               "," + cat.objects[b2] + ")");
            }
    }
    for (auto& [key, sig] : cat.symmetry) {
        auto [a, b] = key;
        if (!h.mu.count({a, b}) || !h.mu.count({b, a}))
            continue;
        GradedMap lhs = h_mor(cat, h, sig).compose(h.mu.at({a, b}));
        GradedMap rhs = h.mu.at({b, a}).compose(koszul_symmetry(h.on_obj[a], h.on_obj[b], cat.conv));
        if (!(lhs == rhs))
            issue("symmetry-compatibility",
                  "H(σ)∘mu != mu∘koszul for (" + cat.objects[a] + "," + cat.objects[b] + ")");
    }
    for (int a = 0; a < n; ++a) {
        if (cat.tensor_defined(cat.unit, a) && h.mu.count({cat.unit, a})) {
            GradedMap lhs = h.mu.at({cat.unit, a}).compose(tensor_map(h.unit_iso, GradedMap::identity(h.on_obj[a])));
            GradedMap expect = GradedMap::identity(h.on_obj[a]);
            expect.src = tensor_graded(qline, h.on_obj[a]);
            if (!(lhs == expect))
                issue("unit-coherence", "left unit square fails at " + cat.objects[a]);
        }
        if (cat.tensor_defined(a, cat.unit) && h.mu.count({a, cat.unit})) {
            GradedMap lhs = h.mu.at({a, cat.unit}).compose(tensor_map(GradedMap::identity(h.on_obj[a]), h.unit_iso));
            GradedMap expect = GradedMap::identity(h.on_obj[a]);
            expect.src = tensor_graded(h.on_obj[a], qline);
            if (!(lhs == expect))
                issue("unit-coherence", "right unit square fails at " + cat.objects[a]);
        }
    }

    for (int a = 0; a < n; ++a) {
        if (!cat.dual_obj[a] || !cat.coev.count(a) || !cat.ev.count(a))
            continue;
        FormalSum as = FormalSum::single(a);
        if (!cat.tensor_defined_fs(as, cat.dual_fs(as)) || !cat.tensor_defined_fs(cat.dual_fs(as), as))
            continue;
        AMor z1 = cat.compose(cat.tensor(cat.identity_mor(as), cat.ev_fs(as)),
                              cat.tensor(cat.coev_fs(as), cat.identity_mor(as)));
        if (!(h_mor(cat, h, z1) == GradedMap::identity(h.on_obj[a])))
            issue("duality-preservation", "H(zig-zag) != id for " + cat.objects[a]);
    }

    return rep;
}

HomSpaceInfo hom_space(const CategoryPresentation& cat, const FormalSum& s, const FormalSum& t)
{
    HomSpaceInfo info;
    info.dim = cat.hom_flat_dim(s, t);
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < s.size(); ++j) {
            ObjId a = s.slots[static_cast<size_t>(j)];
            ObjId b = t.slots[static_cast<size_t>(i)];
            for (int k = 0; k < cat.hom_dims[a][b]; ++k) {
                std::string name = cat.hom_names.empty() || cat.hom_names[a][b].empty()
                                       ? ("e" + std::to_string(k))
                                       : cat.hom_names[a][b][static_cast<size_t>(k)];
                info.basis.push_back("[" + std::to_string(i) + "," + std::to_string(j) + "]" + name);
            }
        }
    return info;
}

}  // namespace mhcat
