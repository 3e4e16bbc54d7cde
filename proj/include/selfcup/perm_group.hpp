#pragma once

#include <memory>
#include <vector>

#include "selfcup/perm.hpp"

namespace selfcup {

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

/// Fully enumerated finite permutation group.  Elements are kept in
/// lexicographic order of their image vectors, so index 0 is always the
/// identity and all cochain indexing is reproducible across runs.
class PermGroup {
public:
    static constexpr int kDefaultOrderCap = 10080;

    int degree() const { return degree_; }
    int order() const { return static_cast<int>(elems_.size()); }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<Perm>& elements() const { return elems_; }
    const Perm& element(int i) const { return elems_[static_cast<size_t>(i)]; }

    /// Index into elements(), or -1 if absent.
    int index_of(const Perm& p) const;
    bool contains(const Perm& p) const { return index_of(p) >= 0; }
    int inverse_index(int i) const { return inv_[static_cast<size_t>(i)]; }
    /// Index of element(i) * element(j).
    int product_index(int i, int j) const;

    bool is_subgroup_of(const PermGroup& g) const;

    friend GroupPtr group_closure(int n, const std::vector<Perm>& gens, int order_cap);

private:
    PermGroup() = default;

    int degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<Perm> elems_;
    std::vector<int> inv_;
    std::vector<int> mul_;  // full |G|^2 table when small enough, else empty
};

/// Enumerates the subgroup generated by `gens` inside Sym(n).
/// Throws SizeError if the order exceeds `order_cap`.
GroupPtr group_closure(int n, const std::vector<Perm>& gens,
                       int order_cap = PermGroup::kDefaultOrderCap);

/// One generator per conjugacy class of cyclic subgroups of G.  The first
/// entry is always the identity (the trivial subgroup).  Representatives are
/// picked deterministically: the first element in canonical order whose
/// generated subgroup is not conjugate to an earlier one.
std::vector<Perm> cyclic_subgroup_reps(const PermGroup& g);

/// One representative subgroup per conjugacy class of subgroups of G of order
/// at most `max_order`, in a deterministic order (by order, then by canonical
/// element list).
std::vector<GroupPtr> subgroup_conjugacy_classes(const PermGroup& g, int max_order);

}  // namespace selfcup
