#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "selfcup/mat.hpp"
#include "selfcup/perm_group.hpp"

namespace selfcup {

/// Module element: length-dim coordinate vector over Z/m.
using ModVector = DenseVec;

class GModule;
using ModulePtr = std::shared_ptr<const GModule>;

/// Finitely generated free Z/m-module with a G-action by invertible matrices.
/// Immutable once built; the action homomorphism property is verified on
/// construction (generator times every element against the enumerated
/// products, which pins down the whole multiplication table).
class GModule {
public:
    int modulus() const { return m_; }
    int dim() const { return dim_; }
    const GroupPtr& group() const { return group_; }

    const Mat& action(int elem_index) const { return action_[static_cast<size_t>(elem_index)]; }
    const Mat& action_of(const Perm& p) const;
    ModVector act(int elem_index, const ModVector& v) const {
        return mat_vec(m_, action(elem_index), v);
    }
    bool trivial_action() const;

    friend ModulePtr module_from_actions(GroupPtr group, int m, std::vector<Mat> actions);

private:
    GModule() = default;

    GroupPtr group_;
    int m_ = 2;
    int dim_ = 0;
    std::vector<Mat> action_;  // indexed by group element index
};

/// Builds the module from one matrix per group generator; the action is
/// extended to all of G by word evaluation and cross-checked.
ModulePtr make_module(const GroupPtr& group, int m, const std::vector<Mat>& generator_matrices);

/// Internal-ish factory: actions for every element, still re-verified on the
/// generator relations.
ModulePtr module_from_actions(GroupPtr group, int m, std::vector<Mat> actions);

ModulePtr trivial_module(const GroupPtr& group, int m, int dim);
/// F_m^degree with G permuting coordinates.
ModulePtr permutation_module(const GroupPtr& group, int m);
/// 1-dimensional module where g acts by its permutation sign.
ModulePtr sign_module(const GroupPtr& group, int m);
/// (Z/m)^2 where odd permutations swap the two coordinates.
ModulePtr swap_module(const GroupPtr& group, int m);

/// Basis convention for M (x) N: e_i (x) f_j has index i * dim(N) + j.
ModulePtr tensor_product(const ModulePtr& m1, const ModulePtr& m2);
ModulePtr tensor_square(const ModulePtr& m1);

/// A derived module together with the canonical projection from M (x) M.
struct QuotientSquare {
    ModulePtr module;
    Mat projection;  // dim(module) x dim(M)^2
};

/// S^2 M: basis e_i e_j for i <= j (lexicographic), dim d(d+1)/2.
QuotientSquare sym_square(const ModulePtr& m1);
/// Wedge^2 M for m = 2 only: basis e_i ^ e_j for i < j, dim d(d-1)/2.
QuotientSquare wedge_square(const ModulePtr& m1);

/// Contragredient module (g acts by transpose of action(g^{-1})).
ModulePtr dual_module(const ModulePtr& m1);
/// Hom(M, N) as dual(M) (x) N; basis E_ij = e_i^* (x) f_j at index
/// i * dim(N) + j, i.e. row-major matrices M -> N.
ModulePtr hom_module(const ModulePtr& m1, const ModulePtr& m2);

/// Basis of the simultaneous fixed space M^H (kernel of all action(h) - 1).
std::vector<ModVector> invariants(const GModule& mod, const PermGroup& subgroup);

/// (log_p |M^<g>|, log_p |dual(M)^<g>|); the two agree (transpose rank).
std::pair<int, int> cyclic_rank_check(const GModule& mod, const Perm& g);

/// Same matrices, group replaced by the subgroup H.
ModulePtr restrict_module(const ModulePtr& m1, const GroupPtr& subgroup);

}  // namespace selfcup
