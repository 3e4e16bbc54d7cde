#pragma once

#include <functional>
#include <map>
#include <optional>

#include "selfcup/cochain.hpp"

namespace selfcup {

/// Cohomology class, carried by a validated cocycle representative.
struct CohClass {
    Cochain rep;

    explicit CohClass(Cochain cocycle);
    const ModulePtr& module() const { return rep.module; }
    int degree() const { return rep.degree; }
};

struct CohomologyOptions {
    int h2_group_cap = 200;       // |G| cap for degree-2 space computations
    int enum_dim_limit = 12;      // exhaustive class listing up to dim <= 12
    size_t enum_count_limit = 65536;  // hard cap on listed classes
    size_t sample_count = 64;
    uint64_t seed = 0xC0C0;
};

struct CohSpace {
    int dim_z = 0;  // log_p of |Z^k|, p the prime under m
    int dim_b = 0;
    int dim_h = 0;
    bool exhaustive = true;
    std::vector<Cochain> reps;  // distinct class representatives (cocycles)
};

/// Kernel/image dimensions and class representatives for H^k(G, M), k in
/// {1,2}.  Representatives are enumerated exhaustively when dim H^k <= 12
/// (and at most enum_count_limit classes), else 64 classes are sampled with
/// the fixed seed.
CohSpace cohomology_space(const ModulePtr& mod, int k, const CohomologyOptions& opts = {});

/// Cup product of 1-cocycles: (a u b)(g,h) = a(g) (x) g.b(h), valued in the
/// supplied tensor module of a's and b's coefficients.
Cochain cup11(const Cochain& a, const Cochain& b, const ModulePtr& tensor_mod);
Cochain cup11(const Cochain& a, const Cochain& b);

/// Solves d(u) = target; returns the canonical witness or nullopt.  Target
/// degree 1 or 2 (unknowns live one degree down).
std::optional<Cochain> coboundary_preimage(const Cochain& target);

/// Witness u with du = c1 - c2, or nullopt with the inconsistent system as
/// the certificate that the classes differ.
std::optional<Cochain> cohomologous2(const Cochain& c1, const Cochain& c2);
bool class_trivial(const Cochain& cocycle);

/// Short exact sequence 0 -> A -> B -> C -> 0 of modules over the same group.
/// Moduli may differ (the Bockstein sequence has A = C = Z/2, B = Z/4);
/// exactness is verified on construction via Howell spans.
class ModuleSES {
public:
    ModuleSES(ModulePtr sub, ModulePtr mid, ModulePtr quot, Mat inj, Mat surj);

    const ModulePtr& sub() const { return sub_; }
    const ModulePtr& mid() const { return mid_; }
    const ModulePtr& quot() const { return quot_; }

    /// Canonical set-theoretic lift through the surjection (integer-embedded
    /// solution on canonical pivot columns).
    ModVector lift(const ModVector& c) const;
    /// Preimage under the injection; v must lie in its image.
    ModVector inj_preimage(const ModVector& v) const;
    ModVector apply_inj(const ModVector& a) const;
    ModVector apply_surj(const ModVector& b) const;

private:
    ModulePtr sub_, mid_, quot_;
    Mat inj_, surj_, lift_;
    std::map<ModVector, ModVector> preimage_;
};

/// Connecting map H^1(C) -> H^2(A): lift the cocycle pointwise, take the bar
/// 2-coboundary in B, pull back along the injection.
Cochain connecting1(const ModuleSES& ses, const Cochain& gamma);
/// Same, with a caller-supplied lift (for lift-independence checks).
Cochain connecting1_with_lift(const ModuleSES& ses, const Cochain& gamma,
                              const std::function<ModVector(const ModVector&)>& lift);

/// Finite torsor under a GModule: a free transitive M-set with G-action.
class AffineGSet {
public:
    /// `gen_action[k][p]` = image of point p under generator k; the action
    /// extends to all of G by word evaluation.  `difference[p*n+q]` is the
    /// module element moving q to p.
    AffineGSet(ModulePtr module, int npoints, const std::vector<std::vector<int>>& gen_action,
               std::vector<ModVector> difference, std::vector<std::string> labels = {});

    const ModulePtr& module() const { return module_; }
    int size() const { return npoints_; }
    int act(int elem_index, int point) const {
        return action_[static_cast<size_t>(elem_index)][static_cast<size_t>(point)];
    }
    const ModVector& difference(int p, int q) const {
        return diff_[static_cast<size_t>(p) * npoints_ + static_cast<size_t>(q)];
    }
    const std::string& label(int p) const { return labels_[static_cast<size_t>(p)]; }

    /// Points fixed by the whole group / by one element of it.
    std::vector<int> fixed_points() const;
    std::vector<int> fixed_points_under(const Perm& g) const;

private:
    ModulePtr module_;
    int npoints_ = 0;
    std::vector<std::vector<int>> action_;  // [|G|][npoints]
    std::vector<ModVector> diff_;
    std::vector<std::string> labels_;
};

struct TorsorClassResult {
    CohClass cls;
    bool trivial;
    std::vector<int> fixed_points;
    std::optional<Cochain> witness;  // 0-cochain with d(witness) = rep, when trivial
};

/// Class of the torsor in H^1(G, M) from the canonical base point; triviality
/// is computed both by linear solve and by fixed-point search and
/// cross-checked.
TorsorClassResult torsor_class(const AffineGSet& t);
/// Same with an explicit base point (for base-independence checks).
CohClass torsor_class_with_base(const AffineGSet& t, int base_point);

/// Restriction of a degree-1 class to a subgroup.
CohClass restrict_class(const CohClass& x, const GroupPtr& subgroup);

}  // namespace selfcup
