#include "selfcup/perm_group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "selfcup/errors.hpp"

namespace selfcup {

namespace {
constexpr size_t kMulTableLimit = 2048;  // |G| above this: compose on demand
}

int PermGroup::index_of(const Perm& p) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
    if (it == elems_.end() || !(*it == p)) return -1;
    return static_cast<int>(it - elems_.begin());
}

int PermGroup::product_index(int i, int j) const {
    if (!mul_.empty()) return mul_[static_cast<size_t>(i) * elems_.size() + static_cast<size_t>(j)];
    return index_of(elems_[static_cast<size_t>(i)] * elems_[static_cast<size_t>(j)]);
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
    if (degree_ != g.degree()) return false;
    for (const Perm& p : elems_)
        if (!g.contains(p)) return false;
    return true;
}

GroupPtr group_closure(int n, const std::vector<Perm>& gens, int order_cap) {
    if (n < 1 || n > 250) throw ValidationError("point count out of supported range");
    for (const Perm& p : gens)
        if (p.degree() != n) throw ValidationError("generator degree does not match point count");

    std::set<Perm> seen;
    seen.insert(Perm::identity(n));
    std::vector<Perm> frontier(seen.begin(), seen.end());
    for (const Perm& p : gens)
        if (seen.insert(p).second) frontier.push_back(p);

    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& cur : frontier) {
            for (const Perm& g : gens) {
                Perm prod = g * cur;
                if (seen.insert(prod).second) {
                    if (static_cast<int>(seen.size()) > order_cap)
                        throw SizeError("group order exceeds cap " + std::to_string(order_cap));
                    next.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }

    auto group = std::shared_ptr<PermGroup>(new PermGroup());
    group->degree_ = n;
    group->gens_ = gens;
    group->elems_.assign(seen.begin(), seen.end());  // std::set iterates in lex order

    const size_t m = group->elems_.size();
    group->inv_.resize(m);
    for (size_t i = 0; i < m; ++i)
        group->inv_[i] = group->index_of(group->elems_[i].inverse());
    if (m <= kMulTableLimit) {
        group->mul_.resize(m * m);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                group->mul_[i * m + j] = group->index_of(group->elems_[i] * group->elems_[j]);
    }
    return group;
}

namespace {

// Sorted element-index set of <g> within the parent group.
std::vector<int> cyclic_subgroup_indices(const PermGroup& g, int gen_index) {
    std::vector<int> out;
    int cur = gen_index;
    const int id = 0;
    out.push_back(id);
    while (cur != id) {
        out.push_back(cur);
        cur = g.product_index(cur, gen_index);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> conjugate_subgroup(const PermGroup& g, const std::vector<int>& sub, int h) {
    std::vector<int> out;
    out.reserve(sub.size());
    const int hinv = g.inverse_index(h);
    for (int s : sub) out.push_back(g.product_index(g.product_index(h, s), hinv));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Perm> cyclic_subgroup_reps(const PermGroup& g) {
    std::vector<Perm> reps;
    std::set<std::vector<int>> classified;  // all conjugates of already-chosen subgroups
    for (int i = 0; i < g.order(); ++i) {
        std::vector<int> sub = cyclic_subgroup_indices(g, i);
        if (classified.count(sub)) continue;
        reps.push_back(g.element(i));
        for (int h = 0; h < g.order(); ++h) classified.insert(conjugate_subgroup(g, sub, h));
    }
    return reps;
}

std::vector<GroupPtr> subgroup_conjugacy_classes(const PermGroup& g, int max_order) {
    // BFS over conjugacy-class representatives: every subgroup K with
    // |K| <= max_order arises as <H, x> for a maximal subgroup H of K, and
    // conjugating shows extending one representative per class suffices.
    std::set<std::vector<int>> class_members;  // conjugates of chosen reps
    std::vector<std::vector<int>> reps;

    std::vector<int> trivial{0};
    reps.push_back(trivial);
    for (int h = 0; h < g.order(); ++h) class_members.insert(trivial);

    auto try_close = [&](const std::vector<int>& base, int extra) -> std::vector<int> {
        // closure of base ∪ {extra}; empty result = cap exceeded
        std::set<int> cur(base.begin(), base.end());
        cur.insert(extra);
        std::vector<int> frontier(cur.begin(), cur.end());
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int a : frontier) {
                for (int b : std::vector<int>(cur.begin(), cur.end())) {
                    for (int prod : {g.product_index(a, b), g.product_index(b, a)}) {
                        if (cur.insert(prod).second) {
                            if (static_cast<int>(cur.size()) > max_order) return {};
                            next.push_back(prod);
                        }
                    }
                }
                int inv = g.inverse_index(a);
                if (cur.insert(inv).second) {
                    if (static_cast<int>(cur.size()) > max_order) return {};
                    next.push_back(inv);
                }
            }
            frontier = std::move(next);
        }
        return {cur.begin(), cur.end()};
    };

    size_t head = 0;
    while (head < reps.size()) {
        std::vector<int> base = reps[head++];
        for (int x = 1; x < g.order(); ++x) {
            std::vector<int> sub = try_close(base, x);
            if (sub.empty() || class_members.count(sub)) continue;
            reps.push_back(sub);
            for (int h = 0; h < g.order(); ++h) class_members.insert(conjugate_subgroup(g, sub, h));
        }
    }

    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    std::vector<GroupPtr> out;
    out.reserve(reps.size());
    for (const auto& sub : reps) {
        std::vector<Perm> gens;
        for (int idx : sub)
            if (idx != 0) gens.push_back(g.element(idx));
        out.push_back(group_closure(g.degree(), gens, max_order));
    }
    return out;
}

}  // namespace selfcup
