#pragma once

#include "mhcat/qmatrix.hpp"

#include <compare>
#include <map>

namespace mhcat {

/* Degree in the bigraded lattice (chain degree, internal degree). Plain
 * Z-graded data lives at chain degree 0. */
struct Deg {
    int n = 0;
    int q = 0;
    auto operator<=>(const Deg&) const = default;
    Deg operator+(const Deg& o) const { return {n + o.n, q + o.q}; }
    Deg operator-() const { return {-n, -q}; }
};

std::string deg_str(const Deg& d);

/* epsilon: (Z x Z, +) -> {+1,-1}, given by its value on the two generators.
 * Default (-1,-1) reproduces epsilon(n) = (-1)^n on each factor. */
struct GradingConvention {
    int eps_n = -1;
    int eps_q = -1;

    int eps(const Deg& d) const
    {
        int s = 1;
        if (eps_n < 0 && (d.n & 1))
            s = -s;
        if (eps_q < 0 && (d.q & 1))
            s = -s;
        return s;
    }
    /* Koszul sign: -1 exactly when eps(a) = eps(b) = -1. */
    int koszul_sign(const Deg& a, const Deg& b) const
    {
        return (eps(a) < 0 && eps(b) < 0) ? -1 : 1;
    }
    bool operator==(const GradingConvention&) const = default;
};

struct GradedSpace {
    std::map<Deg, int> dims;

    int dim(const Deg& d) const
    {
        auto it = dims.find(d);
        return it == dims.end() ? 0 : it->second;
    }
    void set(const Deg& d, int k);
    int total_dim() const;
    bool is_zero() const { return dims.empty(); }
    bool operator==(const GradedSpace&) const = default;

    static GradedSpace line(const Deg& d);  // Q concentrated in degree d
};

GradedSpace direct_sum(const GradedSpace& v, const GradedSpace& w);
GradedSpace tensor_graded(const GradedSpace& v, const GradedSpace& w);
GradedSpace dual_graded(const GradedSpace& v);

/* Factor-basis ordering of (V ox W)_d: lexicographic by (a, V-index, W-index)
 * over decompositions a + b = d. */
struct TensorTerm {
    Deg a;
    int i;
    int j;
};
std::vector<TensorTerm> tensor_layout(const GradedSpace& v, const GradedSpace& w, const Deg& d);
int tensor_pos(const GradedSpace& v, const GradedSpace& w, const Deg& a, int i, const Deg& b, int j);

/* Degree-preserving linear map, stored blockwise; absent block = zero. */
struct GradedMap {
    GradedSpace src;
    GradedSpace tgt;
    std::map<Deg, QMatrix> blocks;

    static GradedMap zero(const GradedSpace& s, const GradedSpace& t) { return {s, t, {}}; }
    static GradedMap identity(const GradedSpace& v);

    QMatrix block(const Deg& d) const;
    void set_block(const Deg& d, QMatrix m);

    GradedMap compose(const GradedMap& inner) const;
    GradedMap operator+(const GradedMap& o) const;
    GradedMap operator-(const GradedMap& o) const;
    GradedMap scaled(const Rat& c) const;

    bool is_zero() const;
    bool is_iso() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool operator==(const GradedMap& o) const;

    std::optional<GradedMap> inverse() const;
};

/* f ox g on the tensor layouts (degree-preserving maps, no Koszul sign). */
GradedMap tensor_map(const GradedMap& f, const GradedMap& g);

/* The Koszul symmetry V ox W -> W ox V. */
GradedMap koszul_symmetry(const GradedSpace& v, const GradedSpace& w, const GradingConvention& conv);

}  // namespace mhcat
