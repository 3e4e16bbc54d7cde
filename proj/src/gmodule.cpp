#include "selfcup/gmodule.hpp"

#include <deque>

#include "selfcup/errors.hpp"
#include "selfcup/zmod.hpp"

namespace selfcup {

const Mat& GModule::action_of(const Perm& p) const {
    int idx = group_->index_of(p);
    if (idx < 0) throw ValidationError("permutation is not a group element");
    return action(idx);
}

bool GModule::trivial_action() const {
    Mat id = mat_identity(dim_);
    for (const Mat& a : action_)
        if (!(a == id)) return false;
    return true;
}

ModulePtr module_from_actions(GroupPtr group, int m, std::vector<Mat> actions) {
    zmod::check_modulus(m);
    const PermGroup& g = *group;
    if (actions.size() != static_cast<size_t>(g.order()))
        throw ValidationError("one action matrix per group element required");
    const int d = actions.empty() ? 0 : actions[0].rows;
    for (const Mat& a : actions)
        if (a.rows != d || a.cols != d) throw ValidationError("action matrices must be square");
    if (!(actions[0] == mat_identity(d)))
        throw ValidationError("identity element must act as the identity matrix");

    // gen * elem consistency against the enumerated products; by induction on
    // word length this verifies the full homomorphism property.
    for (const Perm& gen : g.generators()) {
        int gi = g.index_of(gen);
        for (int e = 0; e < g.order(); ++e) {
            int prod = g.product_index(gi, e);
            if (!(mat_mul(m, actions[static_cast<size_t>(gi)], actions[static_cast<size_t>(e)]) ==
                  actions[static_cast<size_t>(prod)]))
                throw ValidationError("action is not a homomorphism (relation violated)");
        }
    }

    auto mod = std::shared_ptr<GModule>(new GModule());
    mod->group_ = std::move(group);
    mod->m_ = m;
    mod->dim_ = d;
    mod->action_ = std::move(actions);
    return mod;
}

ModulePtr make_module(const GroupPtr& group, int m, const std::vector<Mat>& generator_matrices) {
    zmod::check_modulus(m);
    const PermGroup& g = *group;
    const auto& gens = g.generators();
    if (generator_matrices.size() != gens.size())
        throw ValidationError("need exactly one matrix per group generator");
    const int d = generator_matrices.empty() ? 0 : generator_matrices[0].rows;
    for (const Mat& a : generator_matrices) {
        if (a.rows != a.cols || a.rows != d)
            throw ValidationError("generator matrices must be square of equal size");
        for (uint8_t v : a.a)
            if (v >= m) throw ValidationError("matrix entry not reduced mod m");
        if (!mat_inverse(m, a)) throw ValidationError("generator matrix not invertible mod m");
    }
    if (gens.empty())
        return trivial_module(group, m, d);

    // extend to all of G by breadth-first word evaluation
    std::vector<Mat> actions(static_cast<size_t>(g.order()));
    std::vector<bool> known(static_cast<size_t>(g.order()), false);
    actions[0] = mat_identity(d);
    known[0] = true;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int e = queue.front();
        queue.pop_front();
        for (size_t k = 0; k < gens.size(); ++k) {
            int gi = g.index_of(gens[k]);
            int prod = g.product_index(gi, e);
            Mat val = mat_mul(m, generator_matrices[k], actions[static_cast<size_t>(e)]);
            if (!known[static_cast<size_t>(prod)]) {
                actions[static_cast<size_t>(prod)] = std::move(val);
                known[static_cast<size_t>(prod)] = true;
                queue.push_back(prod);
            } else if (!(actions[static_cast<size_t>(prod)] == val)) {
                throw ValidationError("inconsistent generator assignment (relation violated)");
            }
        }
    }
    return module_from_actions(group, m, std::move(actions));
}

ModulePtr trivial_module(const GroupPtr& group, int m, int dim) {
    std::vector<Mat> actions(static_cast<size_t>(group->order()), mat_identity(dim));
    return module_from_actions(group, m, std::move(actions));
}

ModulePtr permutation_module(const GroupPtr& group, int m) {
    const int n = group->degree();
    std::vector<Mat> actions;
    actions.reserve(static_cast<size_t>(group->order()));
    for (const Perm& p : group->elements()) {
        Mat a(n, n);
        for (int x = 0; x < n; ++x) a.at(p(x), x) = 1;
        actions.push_back(std::move(a));
    }
    return module_from_actions(group, m, std::move(actions));
}

ModulePtr sign_module(const GroupPtr& group, int m) {
    std::vector<Mat> actions;
    actions.reserve(static_cast<size_t>(group->order()));
    for (const Perm& p : group->elements()) {
        Mat a(1, 1);
        a.at(0, 0) = p.sign() > 0 ? 1 : static_cast<uint8_t>(m - 1);
        actions.push_back(std::move(a));
    }
    return module_from_actions(group, m, std::move(actions));
}

ModulePtr swap_module(const GroupPtr& group, int m) {
    std::vector<Mat> actions;
    actions.reserve(static_cast<size_t>(group->order()));
    for (const Perm& p : group->elements()) {
        Mat a(2, 2);
        if (p.sign() > 0) {
            a.at(0, 0) = a.at(1, 1) = 1;
        } else {
            a.at(0, 1) = a.at(1, 0) = 1;
        }
        actions.push_back(std::move(a));
    }
    return module_from_actions(group, m, std::move(actions));
}

ModulePtr tensor_product(const ModulePtr& m1, const ModulePtr& m2) {
    if (m1->group() != m2->group() || m1->modulus() != m2->modulus())
        throw ValidationError("tensor factors must share group and modulus");
    const int m = m1->modulus();
    std::vector<Mat> actions;
    actions.reserve(static_cast<size_t>(m1->group()->order()));
    for (int e = 0; e < m1->group()->order(); ++e)
        actions.push_back(mat_kronecker(m, m1->action(e), m2->action(e)));
    return module_from_actions(m1->group(), m, std::move(actions));
}

ModulePtr tensor_square(const ModulePtr& m1) { return tensor_product(m1, m1); }

namespace {

int sym_index(int d, int i, int j) {
    // i <= j; lexicographic over pairs
    return i * d - i * (i - 1) / 2 + (j - i);
}

int wedge_index(int d, int i, int j) {
    // i < j
    return i * d - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

QuotientSquare sym_square(const ModulePtr& m1) {
    const int d = m1->dim();
    const int m = m1->modulus();
    const int sd = d * (d + 1) / 2;

    Mat proj(sd, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            proj.at(sym_index(d, std::min(i, j), std::max(i, j)), i * d + j) = 1;

    std::vector<Mat> actions;
    actions.reserve(static_cast<size_t>(m1->group()->order()));
    for (int e = 0; e < m1->group()->order(); ++e) {
        const Mat& a = m1->action(e);
        Mat sa(sd, sd);
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) {
                int col = sym_index(d, i, j);
                for (int p = 0; p < d; ++p)
                    for (int q = 0; q < d; ++q) {
                        int row = sym_index(d, std::min(p, q), std::max(p, q));
                        sa.at(row, col) = static_cast<uint8_t>(
                            (sa.at(row, col) + a.at(p, i) * a.at(q, j)) % m);
                    }
            }
        actions.push_back(std::move(sa));
    }
    return {module_from_actions(m1->group(), m, std::move(actions)), std::move(proj)};
}

QuotientSquare wedge_square(const ModulePtr& m1) {
    if (m1->modulus() != 2)
        throw UnsupportedError("wedge_square requires modulus 2");
    const int d = m1->dim();
    const int wd = d * (d - 1) / 2;

    Mat proj(wd, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j)
                proj.at(wedge_index(d, std::min(i, j), std::max(i, j)), i * d + j) = 1;

    std::vector<Mat> actions;
    actions.reserve(static_cast<size_t>(m1->group()->order()));
    for (int e = 0; e < m1->group()->order(); ++e) {
        const Mat& a = m1->action(e);
        Mat wa(wd, wd);
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                int col = wedge_index(d, i, j);
                for (int p = 0; p < d; ++p)
                    for (int q = 0; q < d; ++q) {
                        if (p == q) continue;
                        int row = wedge_index(d, std::min(p, q), std::max(p, q));
                        wa.at(row, col) =
                            static_cast<uint8_t>((wa.at(row, col) + a.at(p, i) * a.at(q, j)) & 1);
                    }
            }
        actions.push_back(std::move(wa));
    }
    return {module_from_actions(m1->group(), 2, std::move(actions)), std::move(proj)};
}

ModulePtr dual_module(const ModulePtr& m1) {
    const int m = m1->modulus();
    std::vector<Mat> actions;
    actions.reserve(static_cast<size_t>(m1->group()->order()));
    for (int e = 0; e < m1->group()->order(); ++e)
        actions.push_back(mat_transpose(m1->action(m1->group()->inverse_index(e))));
    return module_from_actions(m1->group(), m, std::move(actions));
}

ModulePtr hom_module(const ModulePtr& m1, const ModulePtr& m2) {
    return tensor_product(dual_module(m1), m2);
}

std::vector<ModVector> invariants(const GModule& mod, const PermGroup& subgroup) {
    if (!subgroup.is_subgroup_of(*mod.group()))
        throw ValidationError("invariants: H is not a subgroup of G");
    KernelBuilder kb(mod.modulus(), static_cast<size_t>(mod.dim()));
    for (const Perm& h : subgroup.elements()) {
        const Mat& a = mod.action_of(h);
        for (int r = 0; r < mod.dim(); ++r) {
            DenseVec row(static_cast<size_t>(mod.dim()), 0);
            for (int c = 0; c < mod.dim(); ++c)
                row[static_cast<size_t>(c)] =
                    zmod::sub(mod.modulus(), a.at(r, c), c == r ? 1 : 0);
            kb.add_constraint_dense(row);
        }
    }
    return kb.kernel_basis();
}

std::pair<int, int> cyclic_rank_check(const GModule& mod, const Perm& g) {
    int idx = mod.group()->index_of(g);
    if (idx < 0) throw ValidationError("cyclic_rank_check: g not in G");
    const int m = mod.modulus();
    const int d = mod.dim();
    auto fixed_log = [&](const Mat& a) {
        KernelBuilder kb(m, static_cast<size_t>(d));
        for (int r = 0; r < d; ++r) {
            DenseVec row(static_cast<size_t>(d), 0);
            for (int c = 0; c < d; ++c)
                row[static_cast<size_t>(c)] = zmod::sub(m, a.at(r, c), c == r ? 1 : 0);
            kb.add_constraint_dense(row);
        }
        return kb.kernel_span().log_order();
    };
    int dim_fixed = fixed_log(mod.action(idx));
    int dim_dual_fixed = fixed_log(mat_transpose(mod.action(mod.group()->inverse_index(idx))));
    return {dim_fixed, dim_dual_fixed};
}

ModulePtr restrict_module(const ModulePtr& m1, const GroupPtr& subgroup) {
    if (!subgroup->is_subgroup_of(*m1->group()))
        throw ValidationError("restrict_module: H is not a subgroup of G");
    std::vector<Mat> actions;
    actions.reserve(static_cast<size_t>(subgroup->order()));
    for (const Perm& h : subgroup->elements()) actions.push_back(m1->action_of(h));
    return module_from_actions(subgroup, m1->modulus(), std::move(actions));
}

}  // namespace selfcup
