#pragma once

#include "mhcat/category.hpp"

namespace mhcat {

/* Bounded chain complex over a presented category; homological convention,
 * d_n: X_n → X_{n-1}. Empty support is hi < lo. */
struct Complex {
    int lo = 0;
    int hi = -1;
    std::vector<FormalSum> terms;  // terms[i] = X_{lo+i}
    std::vector<AMor> diffs;       // diffs[i]: X_{lo+i+1} → X_{lo+i}

    bool in_support(int n) const { return n >= lo && n <= hi; }
    const FormalSum& term(int n) const;
    bool is_empty() const { return hi < lo; }

    static Complex concentrated(const FormalSum& s, int n = 0);
    static Complex empty();

    bool operator==(const Complex&) const = default;
};

AMor complex_diff(const CategoryPresentation& cat, const Complex& x, int n);  // d_n (zero off-support)
void check_complex(const CategoryPresentation& cat, const Complex& x);        // shapes and d∘d = 0
/* Drop zero terms at the ends of the support interval. */
Complex normalize_complex(const Complex& x);

Complex shift_complex(const CategoryPresentation& cat, const Complex& x, int k);  // X[k], d ↦ (-1)^k d
Complex sum_complex(const CategoryPresentation& cat, const Complex& x, const Complex& y);
Complex tensor_complex(const CategoryPresentation& cat, const Complex& x, const Complex& y);
Complex dual_complex(const CategoryPresentation& cat, const Complex& x);

/* Slot offsets of the (p, n-p) blocks inside (x⊗y)_n, keyed by p. */
std::map<int, int> tensor_complex_offsets(const CategoryPresentation& cat, const Complex& x, const Complex& y,
                                          int n);

struct ChainMap {
    Complex src;
    Complex tgt;
    std::map<int, AMor> comps;  // absent = zero

    bool operator==(const ChainMap&) const = default;
};

AMor chain_comp(const CategoryPresentation& cat, const ChainMap& f, int n);
ChainMap zero_chain_map(const CategoryPresentation& cat, const Complex& x, const Complex& y);
ChainMap identity_chain_map(const CategoryPresentation& cat, const Complex& x);
ChainMap compose_chain(const CategoryPresentation& cat, const ChainMap& g, const ChainMap& f);
ChainMap add_chain(const CategoryPresentation& cat, const ChainMap& f, const ChainMap& g);
ChainMap scale_chain(const CategoryPresentation& cat, const ChainMap& f, const Rat& c);
ChainMap shift_chain_map(const CategoryPresentation& cat, const ChainMap& f, int k);
ChainMap tensor_chain_map(const CategoryPresentation& cat, const ChainMap& f, const ChainMap& g);
/* Koszul symmetry x⊗y → y⊗x, sign (-1)^{pq} on the (p,q) block. */
ChainMap symmetry_chain_map(const CategoryPresentation& cat, const Complex& x, const Complex& y);
/* The associator (x⊗y)⊗z → x⊗(y⊗z): a slot permutation, identity on the
 * underlying formal-sum leaves. Identity whenever the slot orders agree. */
ChainMap assoc_chain_map(const CategoryPresentation& cat, const Complex& x, const Complex& y, const Complex& z);
/* Chain-level duality unit/counit; exact zig-zags, not just up to homotopy. */
ChainMap coev_chain_map(const CategoryPresentation& cat, const Complex& x);  // 1 → x⊗x^
ChainMap ev_chain_map(const CategoryPresentation& cat, const Complex& x);    // x^⊗x → 1
ChainMap transpose_chain_map(const CategoryPresentation& cat, const ChainMap& f);

void check_chain_map(const CategoryPresentation& cat, const ChainMap& f);
bool is_chain_map(const CategoryPresentation& cat, const ChainMap& f);

/* f ~ g modulo the homotopy equation dh + hd = f - g (linear solve). */
bool homotopic(const CategoryPresentation& cat, const ChainMap& f, const ChainMap& g);
bool nullhomotopic(const CategoryPresentation& cat, const ChainMap& f);

struct Cone {
    Complex cone;
    ChainMap incl;  // Y → cone(f)
    ChainMap proj;  // cone(f) → X[1]
};
Cone cone(const CategoryPresentation& cat, const ChainMap& f);

/* Distinguished triangle datum X → Y → Z → X[1]. */
struct Triangle {
    ChainMap f;  // X → Y
    ChainMap g;  // Y → Z
    ChainMap h;  // Z → X[1]
};
Triangle cone_triangle(const CategoryPresentation& cat, const ChainMap& f);
Triangle rotate_triangle(const CategoryPresentation& cat, const Triangle& t);

struct HomotopyPullback {
    Complex w;
    ChainMap to_x;  // plain projection
    ChainMap to_y;
    Triangle triangle;  // W → X⊕Y → B → W[1]
};
HomotopyPullback homotopy_pullback(const CategoryPresentation& cat, const ChainMap& p, const ChainMap& g);

/* Hom space of K^b(A): chain maps modulo null-homotopic ones, with flat
 * coordinates for expressing arbitrary classes in the canonical basis. */
struct KbHomSpace {
    Complex x;
    Complex y;
    int lo = 0;                   // common component-degree window
    int hi = -1;
    std::vector<int> offsets;     // flat offsets per degree (size hi-lo+2)
    QMatrix cycles;               // basis of chain maps, flat columns
    QMatrix boundaries;           // basis of null-homotopic maps
    QMatrix reps;                 // canonical representatives of the quotient
    std::vector<ChainMap> basis;  // reps unflattened

    int dim() const { return reps.cols; }
    QVec flatten(const CategoryPresentation& cat, const ChainMap& f) const;
    ChainMap unflatten(const CategoryPresentation& cat, const QVec& v) const;
    /* Coordinates in the canonical basis, modulo null-homotopy. */
    QVec coords(const CategoryPresentation& cat, const ChainMap& f) const;
    ChainMap from_coords(const CategoryPresentation& cat, const QVec& c) const;
};
KbHomSpace kb_hom(const CategoryPresentation& cat, const Complex& x, const Complex& y);

/* Homology of the complex of graded spaces obtained by applying H termwise;
 * bigraded by (chain degree, internal degree) with canonical bases. */
struct HomologyData {
    Complex x;
    GradedSpace dims;                   // bigraded dimensions
    std::map<Deg, QMatrix> reps;        // canonical cycle representatives
    std::map<Deg, QMatrix> boundaries;  // canonical boundary bases
    std::map<Deg, int> ambient;         // dim H(X_n)_q

    /* Coordinates of a cycle (ambient coordinates) in the homology basis. */
    QVec cycle_coords(const Deg& d, const QVec& v) const;
};
HomologyData apply_kunneth(const CategoryPresentation& cat, const FunctorData& h, const Complex& x);

/* Induced map on homology of a chain map (well-defined on homotopy classes). */
GradedMap induced_map(const CategoryPresentation& cat, const FunctorData& h, const HomologyData& hx,
                      const HomologyData& hy, const ChainMap& f);
GradedMap induced_map(const CategoryPresentation& cat, const FunctorData& h, const ChainMap& f);

/* The Künneth comparison H(x)⊗H(y) → H(x⊗y) on homology, an isomorphism. */
GradedMap kunneth_iso(const CategoryPresentation& cat, const FunctorData& h, const Complex& x, const Complex& y);

bool is_h_epi(const CategoryPresentation& cat, const FunctorData& h, const ChainMap& f);
bool is_h_iso(const CategoryPresentation& cat, const FunctorData& h, const ChainMap& f);

struct SigmaExactReport {
    bool precondition_ok = false;  // second map is an H-epimorphism
    bool exact = false;
    std::vector<std::pair<Deg, std::string>> failures;
};
SigmaExactReport verify_sigma_exact(const CategoryPresentation& cat, const FunctorData& h, const Triangle& t);

struct SameStrengthResult {
    bool same = true;
    // witness: a chain map class killed by exactly one of the functors
    std::optional<ChainMap> witness;
    std::string detail;
};
SameStrengthResult same_strength(const CategoryPresentation& cat, const FunctorData& h, const FunctorData& h2,
                                 const std::vector<Complex>& window);

}  // namespace mhcat
