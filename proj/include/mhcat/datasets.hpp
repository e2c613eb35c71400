#pragma once

#include "mhcat/complex.hpp"

namespace mhcat {

/* Builder for finite windows of categories of graded vector spaces equipped
 * with an automorphism (a representation of Z; involutions give Rep(Z/2)).
 * Morphisms are the graded equivariant maps, computed by solving the
 * commutant equations; composition / tensor / symmetry structure constants
 * are derived numerically; H is the forgetful functor to graded spaces. */
struct RepAtom {
    std::string name;
    std::vector<std::pair<int, int>> degrees;  // (internal degree, dim), ascending
    QMatrix rho;                               // automorphism of the total space
};

struct RepTensorRule {
    std::string a, b;
    std::vector<std::string> parts;
    QMatrix p;  // total iso H(a)⊗H(b) → ⊕ H(parts), degree-preserving
};

struct RepDualRule {
    std::string obj, dual;
    QMatrix u;  // total iso H(dual) → dual_graded(H(obj)), equivariant
};

struct RepCatSpec {
    std::string unit;
    std::vector<RepAtom> atoms;
    std::vector<RepTensorRule> tensors;
    std::vector<RepDualRule> duals;
};

struct BuiltCategory {
    CategoryPresentation cat;
    FunctorData h;
};

BuiltCategory build_rep_category(const RepCatSpec& spec);

/* H' = t ∘ H ∘ t^{-1} for a per-object graded rescaling; same strength as H. */
FunctorData rescale_functor(const CategoryPresentation& cat, const FunctorData& h, const std::string& name,
                            const std::vector<GradedMap>& t);

/* Express a graded map H(s) → H(t) as a morphism of the presentation
 * (coordinates over the hom bases); errors if it is not one. */
AMor amor_from_graded(const CategoryPresentation& cat, const FunctorData& h, const FormalSum& s,
                      const FormalSum& t, const GradedMap& m);

/* Window category of pure graded lines e_q, lo <= q <= hi, with Koszul
 * symmetry; e_{q}⊗e_{q'} = e_{q+q'} presented while the sum stays in range.
 * The Lefschetz object is e_2. */
RepCatSpec line_window_spec(int lo, int hi);
std::string line_atom_name(int q);

/* Bundled synthetic motive data (dimension, Lefschetz twist, duality,
 * hyperplane chain, primitive-inverse cycles, curve splittings). */
struct MotiveSpec {
    std::string name;
    FormalSum object;
    int dim = 0;
    ObjId lefschetz = 0;
    AMor ell;                            // X → X⊗L^{-1}
    AMor duality;                        // X^dual → X⊗L^{-dim}
    std::string hyperplane;              // name of the hyperplane motive, "" if none
    AMor hyperplane_map;                 // X → Y (when hyperplane present)
    std::map<int, AMor> nu;              // nu_i: X⊗L^{-(dim-i)} → X (apex = identity roofs)
    std::vector<AMor> curve_splitting;   // three idempotents when dim == 1
};

struct Dataset {
    std::string name;
    BuiltCategory built;
    std::map<std::string, FunctorData> extra_functors;
    std::vector<std::pair<std::string, Complex>> window;
    std::vector<std::pair<std::string, ChainMap>> cover_epis;
    std::vector<std::pair<std::string, ChainMap>> cover_isos;
    std::map<std::string, MotiveSpec> motives;

    const Complex& window_complex(const std::string& n) const;
};

Dataset dataset_point();
Dataset dataset_graded_line();
Dataset dataset_rep_z2();
Dataset dataset_genus1();
Dataset dataset_surface();
Dataset dataset_unipotent();

std::vector<std::string> bundled_dataset_names();
Dataset bundled_dataset(const std::string& name);

}  // namespace mhcat
