#pragma once

#include "mhcat/graded.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace mhcat {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

using ObjId = int;

/* A formal finite direct sum of base objects, kept as an ordered slot list.
 * Direct sum is concatenation, tensor is lexicographic expansion; both are
 * strictly associative on the nose. */
struct FormalSum {
    std::vector<ObjId> slots;

    FormalSum() = default;
    explicit FormalSum(std::vector<ObjId> s) : slots(std::move(s)) {}
    static FormalSum single(ObjId a) { return FormalSum{{a}}; }

    int size() const { return static_cast<int>(slots.size()); }
    bool empty() const { return slots.empty(); }
    bool operator==(const FormalSum&) const = default;

    static FormalSum concat(const FormalSum& a, const FormalSum& b);
};

struct CategoryPresentation;

/* Morphism between formal sums: a block matrix whose (i,j) entry is the
 * coordinate vector of an element of Hom(src_j, tgt_i) over the presented
 * basis. */
struct AMor {
    FormalSum src;
    FormalSum tgt;
    std::vector<std::vector<QVec>> blocks;  // [tgt slot][src slot]

    bool operator==(const AMor& o) const { return src == o.src && tgt == o.tgt && blocks == o.blocks; }
};

struct ValidationIssue {
    std::string axiom;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool pass() const { return issues.empty(); }
};

/* Finite presentation of a small rigid symmetric monoidal additive category:
 * explicit hom bases, structure constants for composition and tensor,
 * symmetry coordinates, and (optionally per object) duality data. The tensor
 * on objects is a partial map: presentations are finite windows of honestly
 * infinite monoidal categories, and every coherence axiom is checked on the
 * presented part. */
struct CategoryPresentation {
    std::vector<std::string> objects;
    ObjId unit = 0;
    GradingConvention conv;

    std::vector<std::vector<int>> hom_dims;                       // [a][b]
    std::vector<std::vector<std::vector<std::string>>> hom_names; // [a][b][k]
    std::vector<QVec> identity_coords;                            // [a], over hom(a,a)

    // compose_table[{a,b,c}][f * dim(b,c) + g] = coords of g∘f over hom(a,c)
    std::map<std::tuple<ObjId, ObjId, ObjId>, std::vector<QVec>> compose_table;

    std::map<std::pair<ObjId, ObjId>, FormalSum> tensor_obj;
    // tensor_mor[{a,b,a2,b2}][f * dim(b,b2) + g] = f⊗g as a block morphism
    std::map<std::tuple<ObjId, ObjId, ObjId, ObjId>, std::vector<AMor>> tensor_mor;

    std::map<std::pair<ObjId, ObjId>, AMor> symmetry;  // σ_{a,b}: a⊗b → b⊗a

    std::vector<std::optional<ObjId>> dual_obj;
    std::map<ObjId, AMor> coev;  // 1 → a ⊗ a^
    std::map<ObjId, AMor> ev;    // a^ ⊗ a → 1

    int n_objects() const { return static_cast<int>(objects.size()); }
    int hom_dim(ObjId a, ObjId b) const { return hom_dims[a][b]; }
    ObjId object_id(const std::string& name) const;
    bool tensor_defined(ObjId a, ObjId b) const { return tensor_obj.count({a, b}) > 0; }
    const FormalSum& tensor_of(ObjId a, ObjId b) const;
    bool tensor_defined_fs(const FormalSum& s, const FormalSum& t) const;
    FormalSum tensor_fs(const FormalSum& s, const FormalSum& t) const;
    /* Slot offset of the (i,j) pair block inside s⊗t. */
    std::vector<std::vector<int>> tensor_fs_offsets(const FormalSum& s, const FormalSum& t) const;
    FormalSum dual_fs(const FormalSum& s) const;
    bool dual_defined_fs(const FormalSum& s) const;

    const QVec& compose_basis(ObjId a, ObjId b, ObjId c, int f, int g) const;
    const AMor& tensor_basis(ObjId a, ObjId b, ObjId a2, ObjId b2, int f, int g) const;

    // Block morphism algebra
    AMor zero_mor(const FormalSum& s, const FormalSum& t) const;
    AMor identity_mor(const FormalSum& s) const;
    AMor compose(const AMor& g, const AMor& f) const;  // g ∘ f
    AMor add(const AMor& f, const AMor& g) const;
    AMor scale(const AMor& f, const Rat& c) const;
    AMor negate(const AMor& f) const { return scale(f, -1); }
    AMor sub(const AMor& f, const AMor& g) const { return add(f, negate(g)); }
    AMor tensor(const AMor& f, const AMor& g) const;
    bool is_zero_mor(const AMor& f) const;

    AMor symmetry_fs(const FormalSum& s, const FormalSum& t) const;  // s⊗t → t⊗s
    AMor coev_fs(const FormalSum& s) const;                          // 1 → s ⊗ s^
    AMor ev_fs(const FormalSum& s) const;                            // s^ ⊗ s → 1
    AMor transpose_mor(const AMor& f) const;                         // f^: tgt^ → src^

    // Flat coordinates of Hom(s,t): blocks enumerated by (tgt slot, src slot, basis).
    int hom_flat_dim(const FormalSum& s, const FormalSum& t) const;
    QVec flatten(const AMor& f) const;
    AMor unflatten(const FormalSum& s, const FormalSum& t, const QVec& v) const;
    AMor basis_mor(const FormalSum& s, const FormalSum& t, int flat_index) const;

    // Matrix of h ↦ g∘h on flat coordinates, h ∈ Hom(s, g.src).
    QMatrix compose_left_matrix(const AMor& g, const FormalSum& s) const;
    // Matrix of h ↦ h∘g on flat coordinates, h ∈ Hom(g.tgt, t).
    QMatrix compose_right_matrix(const AMor& g, const FormalSum& t) const;

    std::string describe(const FormalSum& s) const;
};

/* Symmetric strong monoidal additive functor to graded vector spaces,
 * presented on the base objects and hom bases. */
struct FunctorData {
    std::string name;
    std::vector<GradedSpace> on_obj;
    std::map<std::pair<ObjId, ObjId>, std::vector<GradedMap>> on_mor;
    std::map<std::pair<ObjId, ObjId>, GradedMap> mu;  // H(a)⊗H(b) → H(a⊗b)
    GradedMap unit_iso;                               // Q at (0,0) → H(1)

    const GradedMap& mor(ObjId a, ObjId b, int k) const;
};

GradedSpace h_space(const CategoryPresentation& cat, const FunctorData& h, const FormalSum& s);
GradedMap h_mor(const CategoryPresentation& cat, const FunctorData& h, const AMor& f);
/* Offset of slot `first` of s inside H(s) at degree d. */
int h_offset(const FunctorData& h, const FormalSum& s, int first, const Deg& d);
/* mu assembled on formal sums: H(s)⊗H(t) → H(s⊗t). */
GradedMap h_mu(const CategoryPresentation& cat, const FunctorData& h, const FormalSum& s, const FormalSum& t);

ValidationReport validate_presentation(const CategoryPresentation& cat);
ValidationReport validate_functor(const CategoryPresentation& cat, const FunctorData& h);

struct HomSpaceInfo {
    int dim;
    std::vector<std::string> basis;  // descriptive labels, block order
};
HomSpaceInfo hom_space(const CategoryPresentation& cat, const FormalSum& s, const FormalSum& t);

}  // namespace mhcat
