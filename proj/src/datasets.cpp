#include "mhcat/datasets.hpp"

#include <algorithm>

namespace mhcat {

namespace {

int total_dim(const GradedSpace& v)
{
    return v.total_dim();
}

int total_offset(const GradedSpace& v, const Deg& d)
{
    int off = 0;
    for (auto& [dd, k] : v.dims) {
        if (dd == d)
            return off;
        off += k;
    }
    throw Error("total_offset: degree not present");
}

/* Block-diagonal total matrix of a degree-preserving map. */
QMatrix graded_to_total(const GradedMap& m)
{
    QMatrix t(total_dim(m.tgt), total_dim(m.src));
    for (auto& [d, k] : m.src.dims) {
        if (m.tgt.dim(d) == 0)
            continue;
        QMatrix blk = m.block(d);
        int ro = total_offset(m.tgt, d);
        int co = total_offset(m.src, d);
        for (int i = 0; i < blk.rows; ++i)
            for (int j = 0; j < blk.cols; ++j)
                t.at(ro + i, co + j) = blk.at(i, j);
    }
    return t;
}

GradedMap total_to_graded(const GradedSpace& src, const GradedSpace& tgt, const QMatrix& t, bool strict)
{
    GradedMap m = GradedMap::zero(src, tgt);
    for (auto& [d, k] : src.dims) {
        if (tgt.dim(d) == 0)
            continue;
        QMatrix blk(tgt.dim(d), k);
        int ro = total_offset(tgt, d);
        int co = total_offset(src, d);
        for (int i = 0; i < blk.rows; ++i)
            for (int j = 0; j < blk.cols; ++j)
                blk.at(i, j) = t.at(ro + i, co + j);
        m.set_block(d, std::move(blk));
    }
    if (strict) {
        // all entries must live on the degree-diagonal blocks
        QMatrix back = graded_to_total(m);
        if (!(back == t))
            throw Error("matrix is not degree-preserving");
    }
    return m;
}

/* Total matrix on the tensor enumerations (degrees ascending, factor layout
 * within each degree) of f ⊗ g for total matrices f: a → a2, g: b → b2. */
QMatrix tensor_total(const GradedSpace& a, const GradedSpace& a2, const QMatrix& ta, const GradedSpace& b,
                     const GradedSpace& b2, const QMatrix& tb)
{
    GradedSpace ts = tensor_graded(a, b);
    GradedSpace ts2 = tensor_graded(a2, b2);
    QMatrix r(total_dim(ts2), total_dim(ts));
    for (auto& [d, kd] : ts.dims) {
        auto terms = tensor_layout(a, b, d);
        int coff = total_offset(ts, d);
        for (size_t col = 0; col < terms.size(); ++col) {
            Deg da = terms[col].a;
            Deg db{d.n - da.n, d.q - da.q};
            int ca = total_offset(a, da) + terms[col].i;
            int cb = total_offset(b, db) + terms[col].j;
            for (auto& [d2, kd2] : ts2.dims) {
                auto terms2 = tensor_layout(a2, b2, d2);
                int roff = total_offset(ts2, d2);
                for (size_t row = 0; row < terms2.size(); ++row) {
                    Deg da2 = terms2[row].a;
                    Deg db2{d2.n - da2.n, d2.q - da2.q};
                    int ra = total_offset(a2, da2) + terms2[row].i;
                    int rb = total_offset(b2, db2) + terms2[row].j;
                    Rat v = ta.at(ra, ca) * tb.at(rb, cb);
                    if (v != 0)
                        r.at(roff + static_cast<int>(row), coff + static_cast<int>(col)) = v;
                }
            }
        }
    }
    return r;
}

GradedSpace sum_spaces(const std::vector<GradedSpace>& parts)
{
    GradedSpace s;
    for (auto& p : parts)
        s = direct_sum(s, p);
    return s;
}

/* Offset of slot `s` inside the direct-sum enumeration at degree d. */
int sum_slot_offset(const std::vector<GradedSpace>& parts, size_t s, const Deg& d)
{
    int off = 0;
    for (size_t j = 0; j < s; ++j)
        off += parts[j].dim(d);
    return off;
}

QMatrix sum_total(const std::vector<GradedSpace>& parts, const std::vector<QMatrix>& mats)
{
    GradedSpace s = sum_spaces(parts);
    int n = total_dim(s);
    QMatrix r(n, n);
    for (size_t sl = 0; sl < parts.size(); ++sl) {
        const GradedSpace& ps = parts[sl];
        const QMatrix& m = mats[sl];
        // m is a total matrix on ps's own enumeration
        for (auto& [d, kd] : ps.dims) {
            int so = total_offset(ps, d);
            for (auto& [d2, kd2] : ps.dims) {
                int so2 = total_offset(ps, d2);
                for (int i = 0; i < kd2; ++i)
                    for (int j = 0; j < kd; ++j) {
                        const Rat& v = m.at(so2 + i, so + j);
                        if (v != 0) {
                            int ro = total_offset(s, d2) + sum_slot_offset(parts, sl, d2) + i;
                            int co = total_offset(s, d) + sum_slot_offset(parts, sl, d) + j;
                            r.at(ro, co) = v;
                        }
                    }
            }
        }
    }
    return r;
}

/* Flat layout of degree-preserving maps a → b (blocks row-major, degrees of a
 * ascending). */
int hom_flat_total(const GradedSpace& a, const GradedSpace& b)
{
    int n = 0;
    for (auto& [d, k] : a.dims)
        n += k * b.dim(d);
    return n;
}

QVec hom_flat(const GradedSpace& a, const GradedSpace& b, const GradedMap& m)
{
    QVec v;
    for (auto& [d, k] : a.dims) {
        if (b.dim(d) == 0)
            continue;
        QMatrix blk = m.block(d);
        for (int i = 0; i < blk.rows; ++i)
            for (int j = 0; j < blk.cols; ++j)
                v.push_back(blk.at(i, j));
    }
    return v;
}

GradedMap hom_unflat(const GradedSpace& a, const GradedSpace& b, const QVec& v)
{
    GradedMap m = GradedMap::zero(a, b);
    size_t pos = 0;
    for (auto& [d, k] : a.dims) {
        int bd = b.dim(d);
        if (bd == 0)
            continue;
        QMatrix blk(bd, k);
        for (int i = 0; i < bd; ++i)
            for (int j = 0; j < k; ++j)
                blk.at(i, j) = v[pos++];
        m.set_block(d, std::move(blk));
    }
    return m;
}

/* Canonical basis of graded equivariant maps (the commutant). */
std::vector<GradedMap> solve_hom(const GradedSpace& a, const QMatrix& ra, const GradedSpace& b,
                                 const QMatrix& rb)
{
    int n = hom_flat_total(a, b);
    if (n == 0)
        return {};
    int tr = total_dim(b) * total_dim(a);
    QMatrix c(tr, n);
    for (int k = 0; k < n; ++k) {
        QVec e(static_cast<size_t>(n));
        e[static_cast<size_t>(k)] = 1;
        GradedMap m = hom_unflat(a, b, e);
        QMatrix t = graded_to_total(m);
        QMatrix lhs = rb * t - t * ra;
        for (int i = 0; i < lhs.rows; ++i)
            for (int j = 0; j < lhs.cols; ++j)
                c.at(i * lhs.cols + j, k) = lhs.at(i, j);
    }
    QMatrix ker = kernel_basis(c);
    std::vector<GradedMap> basis;
    for (int j = 0; j < ker.cols; ++j) {
        QVec v(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            v[static_cast<size_t>(i)] = ker.at(i, j);
        basis.push_back(hom_unflat(a, b, v));
    }
    return basis;
}

std::optional<QVec> coords_in_hom_basis(const GradedSpace& a, const GradedSpace& b,
                                        const std::vector<GradedMap>& basis, const GradedMap& m)
{
    int n = hom_flat_total(a, b);
    std::vector<QVec> cols;
    for (auto& bm : basis)
        cols.push_back(hom_flat(a, b, bm));
    QMatrix bm = QMatrix::from_cols(cols, n);
    return solve(bm, hom_flat(a, b, m));
}

}  // namespace

BuiltCategory build_rep_category(const RepCatSpec& spec)
{
    BuiltCategory out;
    CategoryPresentation& cat = out.cat;
    FunctorData& h = out.h;
    int n = static_cast<int>(spec.atoms.size());

    std::map<std::string, int> index;
    std::vector<GradedSpace> spaces(n);
    std::vector<QMatrix> rhos(n);
    for (int i = 0; i < n; ++i) {
        const RepAtom& a = spec.atoms[static_cast<size_t>(i)];
        if (index.count(a.name))
            throw Error("duplicate atom " + a.name);
        index[a.name] = i;
        GradedSpace s;
        for (auto& [q, k] : a.degrees)
            s.set(Deg{0, q}, k);
        if (a.rho.rows != s.total_dim() || a.rho.cols != s.total_dim())
            throw Error("rho shape mismatch for " + a.name);
        if (!inverse(a.rho))
            throw Error("rho not invertible for " + a.name);
        spaces[static_cast<size_t>(i)] = s;
        rhos[static_cast<size_t>(i)] = a.rho;
        cat.objects.push_back(a.name);
    }
    if (!index.count(spec.unit))
        throw Error("unit atom missing");
    cat.unit = index.at(spec.unit);
    if (!(spaces[static_cast<size_t>(cat.unit)] == GradedSpace::line(Deg{0, 0})))
        throw Error("unit atom must have H = Q in degree 0");

    // hom bases
    cat.hom_dims.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    cat.hom_names.assign(static_cast<size_t>(n), {});
    for (int a = 0; a < n; ++a)
        cat.hom_names[static_cast<size_t>(a)].assign(static_cast<size_t>(n), {});
    std::map<std::pair<int, int>, std::vector<GradedMap>> homs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto basis = solve_hom(spaces[static_cast<size_t>(a)], rhos[static_cast<size_t>(a)],
                                   spaces[static_cast<size_t>(b)], rhos[static_cast<size_t>(b)]);
            cat.hom_dims[static_cast<size_t>(a)][static_cast<size_t>(b)] = static_cast<int>(basis.size());
            for (size_t k = 0; k < basis.size(); ++k)
                cat.hom_names[static_cast<size_t>(a)][static_cast<size_t>(b)].push_back("f" + std::to_string(k));
            if (!basis.empty())
                homs[{a, b}] = basis;
        }

    auto hom_coords = [&](int a, int b, const GradedMap& m) {
        auto it = homs.find({a, b});
        if (it == homs.end()) {
            if (!m.is_zero())
                throw Error("map not in hom span (empty hom space)");
            return QVec{};
        }
        auto c = coords_in_hom_basis(spaces[static_cast<size_t>(a)], spaces[static_cast<size_t>(b)], it->second, m);
        if (!c)
            throw Error("map not in hom span between " + cat.objects[static_cast<size_t>(a)] + " and " +
                        cat.objects[static_cast<size_t>(b)]);
        return *c;
    };

    // identities
    for (int a = 0; a < n; ++a)
        cat.identity_coords.push_back(hom_coords(a, a, GradedMap::identity(spaces[static_cast<size_t>(a)])));

    // composition structure constants
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int dab = cat.hom_dims[static_cast<size_t>(a)][static_cast<size_t>(b)];
                int dbc = cat.hom_dims[static_cast<size_t>(b)][static_cast<size_t>(c)];
                if (!dab || !dbc)
                    continue;
                std::vector<QVec> table;
                for (int f = 0; f < dab; ++f)
                    for (int g = 0; g < dbc; ++g) {
                        GradedMap comp = homs.at({b, c})[static_cast<size_t>(g)].compose(
                            homs.at({a, b})[static_cast<size_t>(f)]);
                        table.push_back(hom_coords(a, c, comp));
                    }
                cat.compose_table[{a, b, c}] = std::move(table);
            }

    cat.dual_obj.assign(static_cast<size_t>(n), std::nullopt);

    // tensor rules: objects, mu, rho on sums
    struct RuleData {
        std::vector<int> part_ids;
        std::vector<GradedSpace> part_spaces;
        GradedSpace sum;
        QMatrix p;
        QMatrix pinv;
    };
    std::map<std::pair<int, int>, RuleData> rules;
    for (const RepTensorRule& r : spec.tensors) {
        int a = index.at(r.a), b = index.at(r.b);
        RuleData rd;
        for (auto& pn : r.parts) {
            rd.part_ids.push_back(index.at(pn));
            rd.part_spaces.push_back(spaces[static_cast<size_t>(index.at(pn))]);
        }
        rd.sum = sum_spaces(rd.part_spaces);
        GradedSpace tsp = tensor_graded(spaces[static_cast<size_t>(a)], spaces[static_cast<size_t>(b)]);
        if (!(rd.sum == tsp))
            throw Error("tensor rule dims mismatch for (" + r.a + "," + r.b + ")");
        if (r.p.rows != total_dim(rd.sum) || r.p.cols != total_dim(tsp))
            throw Error("tensor rule p shape mismatch for (" + r.a + "," + r.b + ")");
        auto pinv = inverse(r.p);
        if (!pinv)
            throw Error("tensor rule p not invertible for (" + r.a + "," + r.b + ")");
        rd.p = r.p;
        rd.pinv = *pinv;
        // equivariance: p ∘ (rho_a ⊗ rho_b) = rho_sum ∘ p
        QMatrix rt = tensor_total(spaces[static_cast<size_t>(a)], spaces[static_cast<size_t>(a)],
                                  rhos[static_cast<size_t>(a)], spaces[static_cast<size_t>(b)],
                                  spaces[static_cast<size_t>(b)], rhos[static_cast<size_t>(b)]);
        std::vector<QMatrix> prho;
        for (int pid : rd.part_ids)
            prho.push_back(rhos[static_cast<size_t>(pid)]);
        QMatrix rs = sum_total(rd.part_spaces, prho);
        if (!(rd.p * rt == rs * rd.p))
            throw Error("tensor rule p not equivariant for (" + r.a + "," + r.b + ")");
        FormalSum fs;
        for (int pid : rd.part_ids)
            fs.slots.push_back(pid);
        cat.tensor_obj[{a, b}] = fs;
        rules[{a, b}] = std::move(rd);
    }

    /* Decompose a total map sum(a,b) → sum(a2,b2) into block coordinates. */
    auto decompose = [&](const RuleData& src, const RuleData& tgt, const QMatrix& t, const std::string& what) {
        AMor m;
        m.src = FormalSum{src.part_ids};
        m.tgt = FormalSum{tgt.part_ids};
        m.blocks.assign(tgt.part_ids.size(), {});
        for (size_t i = 0; i < tgt.part_ids.size(); ++i) {
            m.blocks[i].resize(src.part_ids.size());
            for (size_t j = 0; j < src.part_ids.size(); ++j) {
                const GradedSpace& sj = src.part_spaces[j];
                const GradedSpace& ti = tgt.part_spaces[i];
                GradedMap g = GradedMap::zero(sj, ti);
                for (auto& [d, k] : sj.dims) {
                    if (ti.dim(d) == 0)
                        continue;
                    QMatrix blk(ti.dim(d), k);
                    int ro = total_offset(tgt.sum, d) + sum_slot_offset(tgt.part_spaces, i, d);
                    int co = total_offset(src.sum, d) + sum_slot_offset(src.part_spaces, j, d);
                    for (int r2 = 0; r2 < blk.rows; ++r2)
                        for (int c2 = 0; c2 < blk.cols; ++c2)
                            blk.at(r2, c2) = t.at(ro + r2, co + c2);
                    g.set_block(d, std::move(blk));
                }
                auto c = coords_in_hom_basis(sj, ti, homs.count({src.part_ids[j], tgt.part_ids[i]})
                                                         ? homs.at({src.part_ids[j], tgt.part_ids[i]})
                                                         : std::vector<GradedMap>{},
                                             g);
                if (!c) {
                    if (!g.is_zero())
                        throw Error("tensor window not closed: " + what);
                    c = QVec{};
                }
                m.blocks[i][j] = *c;
            }
        }
        // verify off-degree entries vanish (t must be degree-preserving)
        return m;
    };

    // tensor structure constants
    for (auto& [key, src] : rules)
        for (auto& [key2, tgt] : rules) {
            auto [a, b] = key;
            auto [a2, b2] = key2;
            int dab = cat.hom_dims[static_cast<size_t>(a)][static_cast<size_t>(a2)];
            int dbb = cat.hom_dims[static_cast<size_t>(b)][static_cast<size_t>(b2)];
            if (!dab || !dbb)
                continue;
            std::vector<AMor> table;
            for (int f = 0; f < dab; ++f)
                for (int g = 0; g < dbb; ++g) {
                    QMatrix ft = graded_to_total(homs.at({a, a2})[static_cast<size_t>(f)]);
                    QMatrix gt = graded_to_total(homs.at({b, b2})[static_cast<size_t>(g)]);
                    QMatrix tt = tensor_total(spaces[static_cast<size_t>(a)], spaces[static_cast<size_t>(a2)], ft,
                                              spaces[static_cast<size_t>(b)], spaces[static_cast<size_t>(b2)], gt);
                    QMatrix conj = tgt.p * tt * src.pinv;
                    table.push_back(decompose(src, tgt, conj,
                                              "(" + cat.objects[static_cast<size_t>(a)] + "," +
                                                  cat.objects[static_cast<size_t>(b)] + ")⊗basis"));
                }
            cat.tensor_mor[{a, b, a2, b2}] = std::move(table);
        }

    // symmetry
    for (auto& [key, src] : rules) {
        auto [a, b] = key;
        auto it = rules.find({b, a});
        if (it == rules.end())
            continue;
        GradedMap kz = koszul_symmetry(spaces[static_cast<size_t>(a)], spaces[static_cast<size_t>(b)], cat.conv);
        // koszul_symmetry is a map between tensor layouts; as a total matrix it
        // is indexed by the two tensor enumerations, which match graded_to_total
        QMatrix kt(total_dim(it->second.sum), total_dim(src.sum));
        {
            GradedSpace ts = tensor_graded(spaces[static_cast<size_t>(a)], spaces[static_cast<size_t>(b)]);
            GradedSpace ts2 = tensor_graded(spaces[static_cast<size_t>(b)], spaces[static_cast<size_t>(a)]);
            for (auto& [d, k] : ts.dims) {
                QMatrix blk = kz.block(d);
                int ro = total_offset(ts2, d);
                int co = total_offset(ts, d);
                for (int i = 0; i < blk.rows; ++i)
                    for (int j = 0; j < blk.cols; ++j)
                        if (blk.at(i, j) != 0)
                            kt.at(ro + i, co + j) = blk.at(i, j);
            }
        }
        QMatrix conj = it->second.p * kt * src.pinv;
        cat.symmetry[{a, b}] = decompose(src, it->second, conj,
                                         "symmetry (" + cat.objects[static_cast<size_t>(a)] + "," +
                                             cat.objects[static_cast<size_t>(b)] + ")");
    }

    // duality data
    for (const RepDualRule& r : spec.duals) {
        int a = index.at(r.obj), ad = index.at(r.dual);
        const GradedSpace& sa = spaces[static_cast<size_t>(a)];
        const GradedSpace& sd = spaces[static_cast<size_t>(ad)];
        GradedSpace da = dual_graded(sa);
        if (!(sd == da))
            throw Error("dual rule dims mismatch for " + r.obj);
        if (r.u.rows != total_dim(da) || r.u.cols != total_dim(sd))
            throw Error("dual rule u shape mismatch for " + r.obj);
        auto uinv = inverse(r.u);
        if (!uinv)
            throw Error("dual rule u not invertible for " + r.obj);
        // equivariance: u ∘ rho_dual = (rho_a^{-1})^T ∘ u  (in the dual enumeration)
        QMatrix rha = rhos[static_cast<size_t>(a)];
        QMatrix rinv = *inverse(rha);
        QMatrix rdual(total_dim(da), total_dim(da));
        // entry between dual-basis elements mirrors (rinv)^T on matching indices
        for (auto& [d, k] : sa.dims) {
            int oa = total_offset(sa, d);
            int od = total_offset(da, -d);
            for (auto& [d2, k2] : sa.dims) {
                int oa2 = total_offset(sa, d2);
                int od2 = total_offset(da, -d2);
                for (int i = 0; i < k2; ++i)
                    for (int j = 0; j < k; ++j) {
                        // (rho^{-1})^T entry (dual of e_{d,j}) row, (dual of e_{d2,i}) col
                        const Rat& v = rinv.at(oa2 + i, oa + j);
                        if (v != 0)
                            rdual.at(od + j, od2 + i) = v;
                    }
            }
        }
        if (!(r.u * rhos[static_cast<size_t>(ad)] == rdual * r.u))
            throw Error("dual rule u not equivariant for " + r.obj);
        cat.dual_obj[static_cast<size_t>(a)] = ad;

        auto rule_ad = rules.find({a, ad});
        auto rule_da = rules.find({ad, a});
        if (rule_ad == rules.end() || rule_da == rules.end())
            throw Error("dual rule requires tensor rules (a, a^) and (a^, a) for " + r.obj);

        // coev element: sum_i e_i ⊗ u^{-1}(e_i^*) in H(a)⊗H(dual)
        GradedSpace tsp = tensor_graded(sa, sd);
        QVec cv(static_cast<size_t>(total_dim(tsp)));
        for (auto& [d, k] : sa.dims)
            for (int i = 0; i < k; ++i) {
                int dual_idx = total_offset(da, -d) + i;
                for (int m2 = 0; m2 < total_dim(sd); ++m2) {
                    const Rat& coef = uinv->at(m2, dual_idx);
                    if (coef == 0)
                        continue;
                    // m2 decomposes in sd's enumeration
                    int rem = m2;
                    Deg dd{0, 0};
                    for (auto& [d3, k3] : sd.dims) {
                        if (rem < k3) {
                            dd = d3;
                            break;
                        }
                        rem -= k3;
                    }
                    int pos = total_offset(tsp, d + dd) + tensor_pos(sa, sd, d, i, dd, rem);
                    cv[static_cast<size_t>(pos)] += coef;
                }
            }
        QVec pv = rule_ad->second.p.apply(cv);
        // pv is a degree-0 invariant vector of the parts sum
        AMor coev_m;
        coev_m.src = FormalSum::single(cat.unit);
        coev_m.tgt = FormalSum{rule_ad->second.part_ids};
        coev_m.blocks.assign(rule_ad->second.part_ids.size(), {});
        for (size_t s = 0; s < rule_ad->second.part_ids.size(); ++s) {
            coev_m.blocks[s].resize(1);
            const GradedSpace& ps = rule_ad->second.part_spaces[s];
            GradedMap g = GradedMap::zero(GradedSpace::line(Deg{0, 0}), ps);
            if (ps.dim(Deg{0, 0}) > 0) {
                QMatrix blk(ps.dim(Deg{0, 0}), 1);
                int off = total_offset(rule_ad->second.sum, Deg{0, 0}) +
                          sum_slot_offset(rule_ad->second.part_spaces, s, Deg{0, 0});
                for (int i = 0; i < blk.rows; ++i)
                    blk.at(i, 0) = pv[static_cast<size_t>(off + i)];
                g.set_block(Deg{0, 0}, std::move(blk));
            }
            auto c = hom_coords(cat.unit, rule_ad->second.part_ids[s], g);
            coev_m.blocks[s][0] = c;
        }
        cat.coev[a] = std::move(coev_m);

        // ev functional: (xi, x) ↦ <u(xi), x> on H(dual)⊗H(a)
        GradedSpace tsp2 = tensor_graded(sd, sa);
        QVec evv(static_cast<size_t>(total_dim(tsp2)));
        for (auto& [d, k] : sa.dims)
            for (int i = 0; i < k; ++i) {
                int dual_idx = total_offset(da, -d) + i;
                for (int m2 = 0; m2 < total_dim(sd); ++m2) {
                    const Rat& coef = r.u.at(dual_idx, m2);
                    if (coef == 0)
                        continue;
                    int rem = m2;
                    Deg dd{0, 0};
                    for (auto& [d3, k3] : sd.dims) {
                        if (rem < k3) {
                            dd = d3;
                            break;
                        }
                        rem -= k3;
                    }
                    int pos = total_offset(tsp2, dd + d) + tensor_pos(sd, sa, dd, rem, d, i);
                    evv[static_cast<size_t>(pos)] += coef;
                }
            }
        QVec pe(static_cast<size_t>(total_dim(rule_da->second.sum)));
        {
            // transport the functional through p^{-1}: row vector times pinv
            const QMatrix& pinv = rule_da->second.pinv;
            for (int j = 0; j < pinv.cols; ++j) {
                Rat acc = 0;
                for (int i = 0; i < pinv.rows; ++i)
                    if (evv[static_cast<size_t>(i)] != 0 && pinv.at(i, j) != 0)
                        acc += evv[static_cast<size_t>(i)] * pinv.at(i, j);
                pe[static_cast<size_t>(j)] = acc;
            }
        }
        AMor ev_m;
        ev_m.src = FormalSum{rule_da->second.part_ids};
        ev_m.tgt = FormalSum::single(cat.unit);
        ev_m.blocks.assign(1, {});
        ev_m.blocks[0].resize(rule_da->second.part_ids.size());
        for (size_t s = 0; s < rule_da->second.part_ids.size(); ++s) {
            const GradedSpace& ps = rule_da->second.part_spaces[s];
            GradedMap g = GradedMap::zero(ps, GradedSpace::line(Deg{0, 0}));
            if (ps.dim(Deg{0, 0}) > 0) {
                QMatrix blk(1, ps.dim(Deg{0, 0}));
                int off = total_offset(rule_da->second.sum, Deg{0, 0}) +
                          sum_slot_offset(rule_da->second.part_spaces, s, Deg{0, 0});
                for (int j = 0; j < blk.cols; ++j)
                    blk.at(0, j) = pe[static_cast<size_t>(off + j)];
                g.set_block(Deg{0, 0}, std::move(blk));
            }
            ev_m.blocks[0][s] = hom_coords(rule_da->second.part_ids[s], cat.unit, g);
        }
        cat.ev[a] = std::move(ev_m);
    }

    // functor data: the forgetful functor
    h.name = "H";
    h.on_obj = spaces;
    for (auto& [key, basis] : homs)
        h.on_mor[key] = basis;
    for (auto& [key, rd] : rules) {
        GradedSpace tsp = tensor_graded(spaces[static_cast<size_t>(key.first)],
                                        spaces[static_cast<size_t>(key.second)]);
        h.mu[key] = total_to_graded(tsp, rd.sum, rd.p, true);
    }
    GradedMap ui = GradedMap::zero(GradedSpace::line(Deg{0, 0}), spaces[static_cast<size_t>(cat.unit)]);
    ui.set_block(Deg{0, 0}, QMatrix::identity(1));
    h.unit_iso = ui;
    return out;
}

FunctorData rescale_functor(const CategoryPresentation& cat, const FunctorData& h, const std::string& name,
                            const std::vector<GradedMap>& t)
{
    if (t.size() != h.on_obj.size())
        throw Error("rescale_functor: wrong table size");
    FunctorData h2;
    h2.name = name;
    h2.on_obj = h.on_obj;
    std::vector<GradedMap> tinv;
    for (size_t i = 0; i < t.size(); ++i) {
        auto inv = t[i].inverse();
        if (!inv)
            throw Error("rescale_functor: t not invertible");
        tinv.push_back(*inv);
    }
    for (auto& [key, ms] : h.on_mor) {
        std::vector<GradedMap> out;
        for (auto& m : ms)
            out.push_back(t[static_cast<size_t>(key.second)].compose(m).compose(tinv[static_cast<size_t>(key.first)]));
        h2.on_mor[key] = std::move(out);
    }
    for (auto& [key, mu] : h.mu) {
        const FormalSum& fs = cat.tensor_of(key.first, key.second);
        // t on the direct sum, blockwise
        GradedSpace sum = mu.tgt;
        GradedMap tsum = GradedMap::zero(sum, sum);
        for (auto& [d, k] : sum.dims) {
            QMatrix blk(k, k);
            int off = 0;
            for (ObjId s : fs.slots) {
                const GradedMap& ts = t[static_cast<size_t>(s)];
                QMatrix sb = ts.block(Deg{d.n, d.q});
                for (int i = 0; i < sb.rows; ++i)
                    for (int j = 0; j < sb.cols; ++j)
                        blk.at(off + i, off + j) = sb.at(i, j);
                off += h.on_obj[static_cast<size_t>(s)].dim(d);
            }
            tsum.set_block(d, std::move(blk));
        }
        GradedMap pre = tensor_map(tinv[static_cast<size_t>(key.first)], tinv[static_cast<size_t>(key.second)]);
        h2.mu[key] = tsum.compose(mu).compose(pre);
    }
    h2.unit_iso = t[static_cast<size_t>(cat.unit)].compose(h.unit_iso);
    return h2;
}

AMor amor_from_graded(const CategoryPresentation& cat, const FunctorData& h, const FormalSum& s,
                      const FormalSum& t, const GradedMap& m)
{
    AMor r = cat.zero_mor(s, t);
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < s.size(); ++j) {
            ObjId a = s.slots[static_cast<size_t>(j)];
            ObjId b = t.slots[static_cast<size_t>(i)];
            const GradedSpace& sa = h.on_obj[static_cast<size_t>(a)];
            const GradedSpace& sb = h.on_obj[static_cast<size_t>(b)];
            GradedMap g = GradedMap::zero(sa, sb);
            for (auto& [d, k] : sa.dims) {
                if (sb.dim(d) == 0)
                    continue;
                QMatrix blk(sb.dim(d), k);
                QMatrix big = m.block(d);
                int ro = h_offset(h, t, i, d);
                int co = h_offset(h, s, j, d);
                for (int r2 = 0; r2 < blk.rows; ++r2)
                    for (int c2 = 0; c2 < blk.cols; ++c2)
                        blk.at(r2, c2) = big.at(ro + r2, co + c2);
                g.set_block(d, std::move(blk));
            }
            if (cat.hom_dims[static_cast<size_t>(a)][static_cast<size_t>(b)] == 0) {
                if (!g.is_zero())
                    throw Error("graded map has a component outside the hom spaces");
                continue;
            }
            auto basis = h.on_mor.at({a, b});
            auto c = coords_in_hom_basis(sa, sb, basis, g);
            if (!c)
                throw Error("graded map component is not a morphism of the presentation");
            r.blocks[static_cast<size_t>(i)][static_cast<size_t>(j)] = *c;
        }
    // confirm the assembled morphism maps to m under H
    if (!(h_mor(cat, h, r) == m))
        throw Error("amor_from_graded: reassembly mismatch");
    return r;
}

/* ---------------- bundled datasets ---------------- */

std::string line_atom_name(int q)
{
    return "e" + std::to_string(q);
}

RepCatSpec line_window_spec(int lo, int hi)
{
    RepCatSpec spec;
    spec.unit = line_atom_name(0);
    for (int q = lo; q <= hi; ++q) {
        RepAtom a;
        a.name = line_atom_name(q);
        a.degrees = {{q, 1}};
        a.rho = QMatrix::identity(1);
        spec.atoms.push_back(a);
    }
    for (int a = lo; a <= hi; ++a)
        for (int b = lo; b <= hi; ++b) {
            if (a + b < lo || a + b > hi)
                continue;
            RepTensorRule r;
            r.a = line_atom_name(a);
            r.b = line_atom_name(b);
            r.parts = {line_atom_name(a + b)};
            r.p = QMatrix::identity(1);
            spec.tensors.push_back(r);
        }
    for (int q = lo; q <= hi; ++q) {
        if (-q < lo || -q > hi)
            continue;
        RepDualRule d;
        d.obj = line_atom_name(q);
        d.dual = line_atom_name(-q);
        d.u = QMatrix::identity(1);
        spec.duals.push_back(d);
    }
    return spec;
}

const Complex& Dataset::window_complex(const std::string& n) const
{
    for (auto& [name, c] : window)
        if (name == n)
            return c;
    throw Error("window complex not found: " + n);
}

namespace {

FormalSum fs_of(const CategoryPresentation& cat, const std::vector<std::string>& names)
{
    FormalSum s;
    for (auto& n : names)
        s.slots.push_back(cat.object_id(n));
    return s;
}

GradedMap graded_of(const FunctorData& h, const CategoryPresentation& cat, const FormalSum& s,
                    const FormalSum& t, const std::map<Deg, QMatrix>& blocks)
{
    GradedMap g = GradedMap::zero(h_space(cat, h, s), h_space(cat, h, t));
    for (auto& [d, m] : blocks)
        g.set_block(d, m);
    return g;
}

QMatrix mat(const std::vector<std::vector<int>>& rows)
{
    QMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

QMatrix matq(const std::vector<std::vector<std::string>>& rows)
{
    QMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rat_parse(rows[i][j]);
    return m;
}

ChainMap conc_map(const CategoryPresentation& cat, const AMor& m)
{
    ChainMap f{Complex::concentrated(m.src), Complex::concentrated(m.tgt), {}};
    if (!cat.is_zero_mor(m))
        f.comps[0] = m;
    return f;
}

/* Fold map 1⊕1 → 1 as a chain map. */
ChainMap fold_map(const CategoryPresentation& cat)
{
    FormalSum two{{cat.unit, cat.unit}};
    AMor m = cat.zero_mor(two, FormalSum::single(cat.unit));
    m.blocks[0][0] = cat.identity_coords[static_cast<size_t>(cat.unit)];
    m.blocks[0][1] = cat.identity_coords[static_cast<size_t>(cat.unit)];
    return conc_map(cat, m);
}

/* w: unit → unit ⊕ cone(id_c), an H-isomorphism with a cone apex. */
ChainMap unit_cone_iso(const CategoryPresentation& cat, const Complex& c)
{
    Complex unit = Complex::concentrated(FormalSum::single(cat.unit));
    Cone k = cone(cat, identity_chain_map(cat, c));
    Complex target = sum_complex(cat, unit, k.cone);
    ChainMap w{unit, target, {}};
    AMor m = cat.zero_mor(FormalSum::single(cat.unit), target.term(0));
    m.blocks[0][0] = cat.identity_coords[static_cast<size_t>(cat.unit)];
    w.comps[0] = std::move(m);
    return w;
}

}  // namespace

Dataset dataset_point()
{
    Dataset d;
    d.name = "point";
    d.built = build_rep_category(line_window_spec(-4, 4));
    const CategoryPresentation& cat = d.built.cat;
    const FunctorData& h = d.built.h;
    d.window.push_back({"one", Complex::concentrated(fs_of(cat, {"e0"}))});
    d.window.push_back({"L", Complex::concentrated(fs_of(cat, {"e2"}))});
    d.window.push_back({"Linv", Complex::concentrated(fs_of(cat, {"e-2"}))});
    d.window.push_back({"odd", Complex::concentrated(fs_of(cat, {"e1"}))});
    d.cover_epis.push_back({"fold", fold_map(cat)});
    d.cover_isos.push_back({"unit_cone", unit_cone_iso(cat, Complex::concentrated(fs_of(cat, {"e1"})))});

    MotiveSpec m;
    m.name = "point";
    m.object = fs_of(cat, {"e0"});
    m.dim = 0;
    m.lefschetz = cat.object_id("e2");
    m.ell = cat.zero_mor(m.object, cat.tensor_fs(m.object, fs_of(cat, {"e-2"})));
    m.duality = cat.identity_mor(m.object);
    d.motives["point"] = m;
    (void)h;
    return d;
}

Dataset dataset_graded_line()
{
    Dataset d;
    d.name = "graded-line";
    d.built = build_rep_category(line_window_spec(-4, 4));
    const CategoryPresentation& cat = d.built.cat;
    const FunctorData& h = d.built.h;
    d.window.push_back({"one", Complex::concentrated(fs_of(cat, {"e0"}))});
    d.window.push_back({"e1", Complex::concentrated(fs_of(cat, {"e1"}))});
    d.window.push_back({"L", Complex::concentrated(fs_of(cat, {"e2"}))});
    d.window.push_back({"em1", Complex::concentrated(fs_of(cat, {"e-1"}))});
    d.window.push_back({"mixed", Complex::concentrated(fs_of(cat, {"e0", "e2"}))});
    d.cover_epis.push_back({"fold", fold_map(cat)});
    {
        AMor proj = cat.zero_mor(fs_of(cat, {"e0", "e2"}), fs_of(cat, {"e0"}));
        proj.blocks[0][0] = QVec{Rat(1)};
        d.cover_epis.push_back({"proj_mixed", conc_map(cat, proj)});
    }
    d.cover_isos.push_back({"unit_cone", unit_cone_iso(cat, Complex::concentrated(fs_of(cat, {"e1"})))});

    std::vector<GradedMap> t;
    for (int i = 0; i < cat.n_objects(); ++i) {
        GradedMap g = GradedMap::identity(h.on_obj[static_cast<size_t>(i)]);
        int q = std::stoi(cat.objects[static_cast<size_t>(i)].substr(1));
        t.push_back(g.scaled(Rat(std::abs(q) + 2)));
    }
    d.extra_functors["H2"] = rescale_functor(cat, h, "H2", t);
    return d;
}

Dataset dataset_rep_z2()
{
    Dataset d;
    d.name = "rep-z2";
    RepCatSpec spec;
    spec.unit = "1";
    spec.atoms.push_back({"1", {{0, 1}}, QMatrix::identity(1)});
    spec.atoms.push_back({"g", {{0, 1}}, mat({{-1}})});
    for (std::string a : {"1", "g"})
        for (std::string b : {"1", "g"}) {
            RepTensorRule r;
            r.a = a;
            r.b = b;
            r.parts = {a == b ? "1" : "g"};
            r.p = QMatrix::identity(1);
            spec.tensors.push_back(r);
        }
    spec.duals.push_back({"1", "1", QMatrix::identity(1)});
    spec.duals.push_back({"g", "g", QMatrix::identity(1)});
    d.built = build_rep_category(spec);
    const CategoryPresentation& cat = d.built.cat;
    d.window.push_back({"one", Complex::concentrated(fs_of(cat, {"1"}))});
    d.window.push_back({"g", Complex::concentrated(fs_of(cat, {"g"}))});
    d.window.push_back({"reg", Complex::concentrated(fs_of(cat, {"1", "g"}))});
    d.cover_epis.push_back({"fold", fold_map(cat)});
    {
        AMor proj = cat.zero_mor(fs_of(cat, {"1", "g"}), fs_of(cat, {"1"}));
        proj.blocks[0][0] = QVec{Rat(1)};
        d.cover_epis.push_back({"proj_reg", conc_map(cat, proj)});
    }
    d.cover_isos.push_back({"unit_cone", unit_cone_iso(cat, Complex::concentrated(fs_of(cat, {"g"})))});
    return d;
}

namespace {
MotiveSpec curve_motive(const CategoryPresentation& cat, const FunctorData& h, const std::string& name)
{
    MotiveSpec m;
    m.name = name;
    m.object = fs_of(cat, {"e0", "e1", "e1", "e2"});
    m.dim = 1;
    m.lefschetz = cat.object_id("e2");
    FormalSum xl = cat.tensor_fs(m.object, fs_of(cat, {"e-2"}));
    m.ell = amor_from_graded(cat, h, m.object, xl,
                             graded_of(h, cat, m.object, xl, {{Deg{0, 0}, QMatrix::identity(1)}}));
    FormalSum xd = cat.dual_fs(m.object);
    m.duality = amor_from_graded(cat, h, xd, xl,
                                 graded_of(h, cat, xd, xl,
                                           {{Deg{0, 0}, QMatrix::identity(1)},
                                            {Deg{0, -1}, QMatrix::identity(2)},
                                            {Deg{0, -2}, QMatrix::identity(1)}}));
    m.curve_splitting.push_back(amor_from_graded(
        cat, h, m.object, m.object, graded_of(h, cat, m.object, m.object, {{Deg{0, 0}, QMatrix::identity(1)}})));
    m.curve_splitting.push_back(amor_from_graded(
        cat, h, m.object, m.object, graded_of(h, cat, m.object, m.object, {{Deg{0, 1}, QMatrix::identity(2)}})));
    m.curve_splitting.push_back(amor_from_graded(
        cat, h, m.object, m.object, graded_of(h, cat, m.object, m.object, {{Deg{0, 2}, QMatrix::identity(1)}})));
    return m;
}
}  // namespace

Dataset dataset_genus1()
{
    Dataset d;
    d.name = "genus1";
    d.built = build_rep_category(line_window_spec(-6, 6));
    const CategoryPresentation& cat = d.built.cat;
    const FunctorData& h = d.built.h;
    MotiveSpec m = curve_motive(cat, h, "curve");
    d.motives["curve"] = m;
    d.window.push_back({"one", Complex::concentrated(fs_of(cat, {"e0"}))});
    d.window.push_back({"X", Complex::concentrated(m.object)});
    d.window.push_back({"L", Complex::concentrated(fs_of(cat, {"e2"}))});
    d.window.push_back({"e1", Complex::concentrated(fs_of(cat, {"e1"}))});
    d.cover_epis.push_back({"fold", fold_map(cat)});
    {
        AMor proj = cat.zero_mor(m.object, fs_of(cat, {"e0"}));
        proj.blocks[0][0] = QVec{Rat(1)};
        d.cover_epis.push_back({"proj_h0", conc_map(cat, proj)});
    }
    d.cover_isos.push_back({"unit_cone", unit_cone_iso(cat, Complex::concentrated(fs_of(cat, {"e1"})))});

    std::vector<GradedMap> t;
    for (int i = 0; i < cat.n_objects(); ++i) {
        int q = std::stoi(cat.objects[static_cast<size_t>(i)].substr(1));
        t.push_back(GradedMap::identity(h.on_obj[static_cast<size_t>(i)]).scaled(Rat(std::abs(q) + 2)));
    }
    d.extra_functors["H2"] = rescale_functor(cat, h, "H2", t);
    return d;
}

Dataset dataset_surface()
{
    Dataset d;
    d.name = "surface";
    d.built = build_rep_category(line_window_spec(-8, 10));
    const CategoryPresentation& cat = d.built.cat;
    const FunctorData& h = d.built.h;

    MotiveSpec hy = curve_motive(cat, h, "hyperplane");
    d.motives["hyperplane"] = hy;

    MotiveSpec m;
    m.name = "surface";
    m.object = fs_of(cat, {"e0", "e1", "e1", "e2", "e2", "e3", "e3", "e4"});
    m.dim = 2;
    m.lefschetz = cat.object_id("e2");
    FormalSum xl = cat.tensor_fs(m.object, fs_of(cat, {"e-2"}));
    FormalSum xl2 = cat.tensor_fs(m.object, fs_of(cat, {"e-4"}));
    // ell: iso on H^1→H^3, rank-1 pairing H^0→H^2 and H^2→H^4
    m.ell = amor_from_graded(cat, h, m.object, xl,
                             graded_of(h, cat, m.object, xl,
                                       {{Deg{0, 0}, mat({{1}, {0}})},
                                        {Deg{0, 1}, QMatrix::identity(2)},
                                        {Deg{0, 2}, mat({{1, 0}})}}));
    FormalSum xd = cat.dual_fs(m.object);
    m.duality = amor_from_graded(cat, h, xd, xl2,
                                 graded_of(h, cat, xd, xl2,
                                           {{Deg{0, 0}, QMatrix::identity(1)},
                                            {Deg{0, -1}, QMatrix::identity(2)},
                                            {Deg{0, -2}, QMatrix::identity(2)},
                                            {Deg{0, -3}, QMatrix::identity(2)},
                                            {Deg{0, -4}, QMatrix::identity(1)}}));
    m.hyperplane = "hyperplane";
    m.hyperplane_map = amor_from_graded(cat, h, m.object, hy.object,
                                        graded_of(h, cat, m.object, hy.object,
                                                  {{Deg{0, 0}, QMatrix::identity(1)},
                                                   {Deg{0, 1}, QMatrix::identity(2)},
                                                   {Deg{0, 2}, mat({{1, 0}})}}));
    m.nu[0] = amor_from_graded(cat, h, xl2, m.object,
                               graded_of(h, cat, xl2, m.object, {{Deg{0, 0}, QMatrix::identity(1)}}));
    m.nu[1] = amor_from_graded(cat, h, xl, m.object,
                               graded_of(h, cat, xl, m.object, {{Deg{0, 1}, QMatrix::identity(2)}}));
    d.motives["surface"] = m;

    d.window.push_back({"one", Complex::concentrated(fs_of(cat, {"e0"}))});
    d.window.push_back({"X", Complex::concentrated(m.object)});
    d.window.push_back({"Y", Complex::concentrated(hy.object)});
    d.window.push_back({"L", Complex::concentrated(fs_of(cat, {"e2"}))});
    d.cover_epis.push_back({"fold", fold_map(cat)});
    d.cover_isos.push_back({"unit_cone", unit_cone_iso(cat, Complex::concentrated(fs_of(cat, {"e1"})))});
    return d;
}

Dataset dataset_unipotent()
{
    Dataset d;
    d.name = "rep-z-unipotent";
    RepCatSpec spec;
    spec.unit = "1";
    spec.atoms.push_back({"1", {{0, 1}}, QMatrix::identity(1)});
    spec.atoms.push_back({"U", {{0, 2}}, mat({{1, 1}, {0, 1}})});
    spec.atoms.push_back({"L", {{2, 1}}, QMatrix::identity(1)});
    spec.atoms.push_back({"L-", {{-2, 1}}, QMatrix::identity(1)});
    spec.atoms.push_back({"V", {{0, 1}, {2, 1}}, mat({{1, 0}, {1, 1}})});
    spec.atoms.push_back({"W", {{-2, 1}, {0, 1}}, mat({{1, 0}, {1, 1}})});

    auto unit_rule = [&](const std::string& a) {
        GradedSpace s;
        for (auto& atom : spec.atoms)
            if (atom.name == a)
                for (auto& [q, k] : atom.degrees)
                    s.set(Deg{0, q}, k);
        int n = s.total_dim();
        RepTensorRule l{"1", a, {a}, QMatrix::identity(n)};
        RepTensorRule r{a, "1", {a}, QMatrix::identity(n)};
        spec.tensors.push_back(l);
        if (a != "1")
            spec.tensors.push_back(r);
    };
    for (auto name : {"1", "U", "L", "L-", "V", "W"})
        unit_rule(name);
    spec.tensors.push_back({"L", "L-", {"1"}, QMatrix::identity(1)});
    spec.tensors.push_back({"L-", "L", {"1"}, QMatrix::identity(1)});
    spec.tensors.push_back({"L-", "V", {"W"}, QMatrix::identity(2)});
    spec.tensors.push_back({"V", "L-", {"W"}, QMatrix::identity(2)});
    spec.tensors.push_back({"L", "W", {"V"}, QMatrix::identity(2)});
    spec.tensors.push_back({"W", "L", {"V"}, QMatrix::identity(2)});

    spec.duals.push_back({"1", "1", QMatrix::identity(1)});
    spec.duals.push_back({"L", "L-", QMatrix::identity(1)});
    spec.duals.push_back({"L-", "L", QMatrix::identity(1)});

    d.built = build_rep_category(spec);
    CategoryPresentation& catm = d.built.cat;
    // V and W are dual to each other, but only as named objects: the
    // evaluation data would require the S-tower of tensor products, which
    // this window does not present. dual_fs works; dual_complex refuses.
    catm.dual_obj[catm.object_id("V")] = catm.object_id("W");
    catm.dual_obj[catm.object_id("W")] = catm.object_id("V");
    const CategoryPresentation& cat = d.built.cat;
    const FunctorData& h = d.built.h;

    d.window.push_back({"one", Complex::concentrated(fs_of(cat, {"1"}))});
    d.window.push_back({"U", Complex::concentrated(fs_of(cat, {"U"}))});
    d.window.push_back({"V", Complex::concentrated(fs_of(cat, {"V"}))});
    d.window.push_back({"W", Complex::concentrated(fs_of(cat, {"W"}))});

    // H-epimorphisms: the coinvariant projections U → 1 and V → 1
    AMor pu = amor_from_graded(cat, h, fs_of(cat, {"U"}), fs_of(cat, {"1"}),
                               graded_of(h, cat, fs_of(cat, {"U"}), fs_of(cat, {"1"}),
                                         {{Deg{0, 0}, mat({{0, 1}})}}));
    AMor pv = amor_from_graded(cat, h, fs_of(cat, {"V"}), fs_of(cat, {"1"}),
                               graded_of(h, cat, fs_of(cat, {"V"}), fs_of(cat, {"1"}),
                                         {{Deg{0, 0}, mat({{1}})}}));
    ChainMap pu_map = conc_map(cat, pu);
    ChainMap pv_map = conc_map(cat, pv);
    d.cover_epis.push_back({"fold", fold_map(cat)});
    d.cover_epis.push_back({"pU", pu_map});
    d.cover_epis.push_back({"pV", pv_map});

    // cone-apex H-isomorphism: L[1] → cone(pV) via the socle inclusion
    {
        Cone cpv = cone(cat, pv_map);
        Complex l1 = shift_complex(cat, Complex::concentrated(fs_of(cat, {"L"})), 1);
        AMor incl = amor_from_graded(cat, h, fs_of(cat, {"L"}), fs_of(cat, {"V"}),
                                     graded_of(h, cat, fs_of(cat, {"L"}), fs_of(cat, {"V"}),
                                               {{Deg{0, 2}, mat({{1}})}}));
        ChainMap w{l1, cpv.cone, {}};
        w.comps[1] = incl;
        check_chain_map(cat, w);
        d.cover_isos.push_back({"socle_cone", w});
    }

    MotiveSpec m;
    m.name = "probe";
    m.object = fs_of(cat, {"V"});
    m.dim = 1;
    m.lefschetz = cat.object_id("L");
    FormalSum w = cat.tensor_fs(m.object, fs_of(cat, {"L-"}));
    m.ell = amor_from_graded(cat, h, m.object, w,
                             graded_of(h, cat, m.object, w, {{Deg{0, 0}, mat({{1}})}}));
    m.duality = cat.identity_mor(w);
    d.motives["probe"] = m;
    return d;
}

std::vector<std::string> bundled_dataset_names()
{
    return {"point", "graded-line", "rep-z2", "genus1", "surface", "rep-z-unipotent"};
}

Dataset bundled_dataset(const std::string& name)
{
    if (name == "point")
        return dataset_point();
    if (name == "graded-line")
        return dataset_graded_line();
    if (name == "rep-z2")
        return dataset_rep_z2();
    if (name == "genus1")
        return dataset_genus1();
    if (name == "surface")
        return dataset_surface();
    if (name == "rep-z-unipotent")
        return dataset_unipotent();
    throw Error("unknown bundled dataset: " + name);
}

}  // namespace mhcat
