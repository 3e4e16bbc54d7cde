#include "selfcup/cohomology.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "selfcup/errors.hpp"
#include "selfcup/zmod.hpp"

namespace selfcup {

CohClass::CohClass(Cochain cocycle) : rep(std::move(cocycle)) {
    if (!is_cocycle(rep)) throw ValidationError("CohClass representative is not a cocycle");
}

namespace {

// Streams the degree-k cocycle constraints (rows of d^k on C^k coordinates)
// into `sink`.  Columns index C^k coordinates flat.
template <typename Sink>
void stream_cocycle_constraints(const GModule& mod, int k, Sink&& sink) {
    const PermGroup& g = *mod.group();
    const int m = mod.modulus();
    const int d = mod.dim();
    const size_t s = static_cast<size_t>(g.order()) - 1;
    SparseRow row;

    auto tup1 = [&](size_t a) { return (a - 1) * static_cast<size_t>(d); };
    auto tup2 = [&](size_t a, size_t b) {
        return ((a - 1) * s + (b - 1)) * static_cast<size_t>(d);
    };

    if (k == 1) {
        // g.c(h) - c(gh) + c(g) = 0
        for (size_t a = 1; a <= s; ++a) {
            const Mat& act = mod.action(static_cast<int>(a));
            for (size_t b = 1; b <= s; ++b) {
                int ab = g.product_index(static_cast<int>(a), static_cast<int>(b));
                for (int i = 0; i < d; ++i) {
                    row.clear();
                    for (int j = 0; j < d; ++j)
                        if (act.at(i, j))
                            row.emplace_back(static_cast<uint32_t>(tup1(b)) + j, act.at(i, j));
                    if (ab != 0)
                        row.emplace_back(static_cast<uint32_t>(tup1(static_cast<size_t>(ab))) + i,
                                         static_cast<uint8_t>(m - 1));
                    row.emplace_back(static_cast<uint32_t>(tup1(a)) + i, 1);
                    sink(row);
                }
            }
        }
        return;
    }
    // k == 2: g.c(h,e) - c(gh,e) + c(g,he) - c(g,h) = 0
    for (size_t a = 1; a <= s; ++a) {
        const Mat& act = mod.action(static_cast<int>(a));
        for (size_t b = 1; b <= s; ++b) {
            int ab = g.product_index(static_cast<int>(a), static_cast<int>(b));
            for (size_t e = 1; e <= s; ++e) {
                int be = g.product_index(static_cast<int>(b), static_cast<int>(e));
                for (int i = 0; i < d; ++i) {
                    row.clear();
                    for (int j = 0; j < d; ++j)
                        if (act.at(i, j))
                            row.emplace_back(static_cast<uint32_t>(tup2(b, e)) + j, act.at(i, j));
                    if (ab != 0)
                        row.emplace_back(
                            static_cast<uint32_t>(tup2(static_cast<size_t>(ab), e)) + i,
                            static_cast<uint8_t>(m - 1));
                    if (be != 0)
                        row.emplace_back(
                            static_cast<uint32_t>(tup2(a, static_cast<size_t>(be))) + i, 1);
                    row.emplace_back(static_cast<uint32_t>(tup2(a, b)) + i,
                                     static_cast<uint8_t>(m - 1));
                    sink(row);
                }
            }
        }
    }
}

int prime_under(int m) { return m == 4 ? 2 : m; }

}  // namespace

CohSpace cohomology_space(const ModulePtr& mod, int k, const CohomologyOptions& opts) {
    if (k != 1 && k != 2) throw ValidationError("cohomology_space supports k in {1,2}");
    const PermGroup& g = *mod->group();
    if (k == 2 && g.order() > opts.h2_group_cap)
        throw SizeError("group order exceeds the H^2 cap of " +
                        std::to_string(opts.h2_group_cap));
    const int m = mod->modulus();
    const int d = mod->dim();
    const size_t s = static_cast<size_t>(g.order()) - 1;
    size_t ck_dim = static_cast<size_t>(d);
    for (int i = 0; i < k; ++i) ck_dim *= s;

    CohSpace out;
    if (s == 0 || ck_dim == 0) {
        out.reps.push_back(Cochain::zero(mod, k));
        return out;
    }

    // Z^k
    KernelBuilder kb(m, ck_dim);
    stream_cocycle_constraints(*mod, k, [&](const SparseRow& row) { kb.add_constraint(row); });
    SpanForm zspan = kb.kernel_span();
    out.dim_z = zspan.log_order();

    // B^k = image of d^(k-1) on a basis of C^(k-1)
    SpanForm bspan(m, ck_dim);
    size_t prev_dim = static_cast<size_t>(d);
    for (int i = 0; i + 1 < k; ++i) prev_dim *= s;
    for (size_t idx = 0; idx < prev_dim; ++idx) {
        Cochain basis = Cochain::zero(mod, k - 1);
        basis.data[idx] = 1;
        bspan.add(coboundary(basis).data);
    }
    out.dim_b = bspan.log_order();
    out.dim_h = out.dim_z - out.dim_b;

    // class representatives modulo B^k, via canonical Howell coset reduction
    std::vector<DenseVec> zgens;
    for (const DenseVec& row : zspan.basis()) {
        DenseVec r = bspan.reduce(row);
        bool zero = std::all_of(r.begin(), r.end(), [](uint8_t v) { return v == 0; });
        if (!zero) zgens.push_back(std::move(r));
    }

    std::set<DenseVec> found;
    const int p = prime_under(m);
    double log_total = out.dim_h * std::log2(static_cast<double>(p));
    bool exhaustive = out.dim_h <= opts.enum_dim_limit &&
                      log_total <= std::log2(static_cast<double>(opts.enum_count_limit)) + 0.5;
    if (exhaustive) {
        std::deque<DenseVec> queue;
        DenseVec zero(ck_dim, 0);
        found.insert(zero);
        queue.push_back(zero);
        while (!queue.empty()) {
            DenseVec cur = queue.front();
            queue.pop_front();
            for (const DenseVec& gen : zgens) {
                DenseVec nxt(ck_dim);
                for (size_t i = 0; i < ck_dim; ++i) nxt[i] = zmod::add(m, cur[i], gen[i]);
                nxt = bspan.reduce(nxt);
                if (found.insert(nxt).second) queue.push_back(std::move(nxt));
            }
        }
    } else {
        out.exhaustive = false;
        std::mt19937_64 rng(opts.seed);
        size_t attempts = opts.sample_count * 16;
        while (found.size() < opts.sample_count && attempts-- > 0) {
            DenseVec v(ck_dim, 0);
            for (const DenseVec& gen : zgens) {
                int c = static_cast<int>(rng() % static_cast<uint64_t>(m));
                if (c)
                    for (size_t i = 0; i < ck_dim; ++i)
                        v[i] = static_cast<uint8_t>((v[i] + c * gen[i]) % m);
            }
            found.insert(bspan.reduce(v));
        }
    }

    for (const DenseVec& v : found) {
        Cochain c = Cochain::zero(mod, k);
        c.data = v;
        out.reps.push_back(std::move(c));
    }
    return out;
}

Cochain cup11(const Cochain& a, const Cochain& b, const ModulePtr& tensor_mod) {
    if (a.degree != 1 || b.degree != 1) throw ValidationError("cup11 needs 1-cochains");
    if (a.module->group() != b.module->group() || a.module->modulus() != b.module->modulus())
        throw ValidationError("cup11 factors must share group and modulus");
    if (tensor_mod->dim() != a.dim() * b.dim() ||
        tensor_mod->group() != a.module->group() || tensor_mod->modulus() != a.module->modulus())
        throw ValidationError("cup11: bad tensor module");
    if (!is_cocycle(a) || !is_cocycle(b)) throw ValidationError("cup11 inputs must be cocycles");

    const int m = a.module->modulus();
    const int da = a.dim();
    const int db = b.dim();
    const size_t s = a.span();
    Cochain out = Cochain::zero(tensor_mod, 2);
    for (size_t g = 1; g <= s; ++g) {
        const uint8_t* ag = a.at(g - 1);
        const Mat& act = b.module->action(static_cast<int>(g));
        for (size_t h = 1; h <= s; ++h) {
            ModVector gbh = mat_vec(m, act, b.value1(static_cast<int>(h)));
            uint8_t* dst = out.at((g - 1) * s + (h - 1));
            for (int i = 0; i < da; ++i)
                for (int j = 0; j < db; ++j)
                    dst[i * db + j] = static_cast<uint8_t>((ag[i] * gbh[static_cast<size_t>(j)]) % m);
        }
    }
    if (!is_cocycle(out)) throw ValidationError("cup11 output failed the cocycle check");
    return out;
}

Cochain cup11(const Cochain& a, const Cochain& b) {
    return cup11(a, b, tensor_product(a.module, b.module));
}

std::optional<Cochain> coboundary_preimage(const Cochain& target) {
    if (target.degree != 1 && target.degree != 2)
        throw ValidationError("coboundary_preimage supports target degrees 1 and 2");
    const GModule& mod = *target.module;
    const PermGroup& g = *mod.group();
    const int m = mod.modulus();
    const int d = mod.dim();
    const size_t s = target.span();

    size_t unknowns = target.degree == 1 ? static_cast<size_t>(d)
                                         : s * static_cast<size_t>(d);
    LinSystem sys(m, unknowns);
    SparseRow row;

    if (target.degree == 1) {
        // d(v)(g) = g.v - v
        for (size_t a = 1; a <= s; ++a) {
            const Mat& act = mod.action(static_cast<int>(a));
            for (int i = 0; i < d; ++i) {
                row.clear();
                for (int j = 0; j < d; ++j) {
                    uint8_t coef = zmod::sub(m, act.at(i, j), i == j ? 1 : 0);
                    if (coef) row.emplace_back(static_cast<uint32_t>(j), coef);
                }
                sys.add_equation(row, target.at(a - 1)[i]);
            }
        }
    } else {
        // d(u)(g,h) = g.u(h) - u(gh) + u(g)
        for (size_t a = 1; a <= s; ++a) {
            const Mat& act = mod.action(static_cast<int>(a));
            for (size_t b = 1; b <= s; ++b) {
                int ab = g.product_index(static_cast<int>(a), static_cast<int>(b));
                for (int i = 0; i < d; ++i) {
                    row.clear();
                    for (int j = 0; j < d; ++j)
                        if (act.at(i, j))
                            row.emplace_back(static_cast<uint32_t>((b - 1) * d) + j,
                                             act.at(i, j));
                    if (ab != 0)
                        row.emplace_back(
                            static_cast<uint32_t>((static_cast<size_t>(ab) - 1) * d) + i,
                            static_cast<uint8_t>(m - 1));
                    row.emplace_back(static_cast<uint32_t>((a - 1) * d) + i, 1);
                    sys.add_equation(row, target.at((a - 1) * s + (b - 1))[i]);
                }
            }
        }
    }

    std::optional<DenseVec> sol = sys.solve();
    if (!sol) return std::nullopt;
    Cochain u = Cochain::zero(target.module, target.degree - 1);
    u.data = std::move(*sol);
    return u;
}

std::optional<Cochain> cohomologous2(const Cochain& c1, const Cochain& c2) {
    if (c1.module != c2.module || c1.degree != 2 || c2.degree != 2)
        throw ValidationError("cohomologous2 needs two 2-cochains over the same module");
    if (!is_cocycle(c1) || !is_cocycle(c2))
        throw ValidationError("cohomologous2 inputs must be cocycles");
    return coboundary_preimage(c1 - c2);
}

bool class_trivial(const Cochain& cocycle) {
    return coboundary_preimage(cocycle).has_value();
}

namespace {

// integer p-adic exponent of a subgroup order
int span_log(const SpanForm& s) { return s.log_order(); }

}  // namespace

ModuleSES::ModuleSES(ModulePtr sub, ModulePtr mid, ModulePtr quot, Mat inj, Mat surj)
    : sub_(std::move(sub)), mid_(std::move(mid)), quot_(std::move(quot)),
      inj_(std::move(inj)), surj_(std::move(surj)) {
    const GModule& a = *sub_;
    const GModule& b = *mid_;
    const GModule& c = *quot_;
    if (a.group() != b.group() || b.group() != c.group())
        throw ValidationError("SES modules must share the group");
    const int ma = a.modulus(), mb = b.modulus(), mc = c.modulus();
    if (mb % ma != 0 || mb % mc != 0)
        throw ValidationError("SES moduli must divide the middle modulus");
    if (inj_.rows != b.dim() || inj_.cols != a.dim() || surj_.rows != c.dim() ||
        surj_.cols != b.dim())
        throw ValidationError("SES matrix shapes do not match the modules");

    // well-definedness of the injection: ma * inj = 0 mod mb
    for (uint8_t v : inj_.a)
        if ((ma * v) % mb != 0)
            throw ValidationError("injection does not kill ma times the source");

    // injectivity: |image| = |A|
    SpanForm im_inj(mb, static_cast<size_t>(b.dim()));
    for (int j = 0; j < a.dim(); ++j) {
        DenseVec col(static_cast<size_t>(b.dim()));
        for (int i = 0; i < b.dim(); ++i) col[static_cast<size_t>(i)] = inj_.at(i, j);
        im_inj.add(col);
    }
    int log_a = a.dim() * (ma == 4 ? 2 : 1);
    if (prime_under(ma) != prime_under(mb) || span_log(im_inj) != log_a)
        throw ValidationError("SES injection is not injective");

    // surjectivity: |image of surj| = |C|
    SpanForm im_surj(mc, static_cast<size_t>(c.dim()));
    for (int j = 0; j < b.dim(); ++j) {
        DenseVec col(static_cast<size_t>(c.dim()));
        for (int i = 0; i < c.dim(); ++i) col[static_cast<size_t>(i)] = surj_.at(i, j);
        im_surj.add(col);
    }
    if (span_log(im_surj) != c.dim() * (mc == 4 ? 2 : 1))
        throw ValidationError("SES surjection is not surjective");

    // exactness in the middle: ker(surj) = im(inj), computed over Z/mb by
    // scaling the surjection rows with mb/mc
    KernelBuilder ker(mb, static_cast<size_t>(b.dim()));
    const int scale = mb / mc;
    for (int r = 0; r < c.dim(); ++r) {
        DenseVec row(static_cast<size_t>(b.dim()));
        for (int j = 0; j < b.dim(); ++j)
            row[static_cast<size_t>(j)] = static_cast<uint8_t>((scale * surj_.at(r, j)) % mb);
        ker.add_constraint_dense(row);
    }
    SpanForm ker_span = ker.kernel_span();
    if (ker_span.log_order() != span_log(im_inj))
        throw ValidationError("SES is not exact in the middle (order mismatch)");
    for (const DenseVec& v : ker_span.basis())
        if (!im_inj.contains(v))
            throw ValidationError("SES is not exact in the middle");

    // equivariance of both maps on generators
    for (const Perm& gen : b.group()->generators()) {
        int gi = b.group()->index_of(gen);
        for (int j = 0; j < a.dim(); ++j) {
            ModVector e(static_cast<size_t>(a.dim()), 0);
            e[static_cast<size_t>(j)] = 1;
            if (apply_inj(a.act(gi, e)) != mat_vec(mb, b.action(gi), apply_inj(e)))
                throw ValidationError("SES injection is not equivariant");
        }
        for (int j = 0; j < b.dim(); ++j) {
            ModVector e(static_cast<size_t>(b.dim()), 0);
            e[static_cast<size_t>(j)] = 1;
            if (apply_surj(mat_vec(mb, b.action(gi), e)) != c.act(gi, apply_surj(e)))
                throw ValidationError("SES surjection is not equivariant");
        }
    }

    // canonical lift: solve surj * x = f_j for each quotient basis vector
    lift_ = Mat(b.dim(), c.dim());
    for (int j = 0; j < c.dim(); ++j) {
        LinSystem sys(mc, static_cast<size_t>(b.dim()));
        for (int r = 0; r < c.dim(); ++r) {
            SparseRow row;
            for (int k = 0; k < b.dim(); ++k)
                if (surj_.at(r, k)) row.emplace_back(static_cast<uint32_t>(k), surj_.at(r, k));
            sys.add_equation(row, r == j ? 1 : 0);
        }
        std::optional<DenseVec> sol = sys.solve();
        if (!sol) throw ValidationError("SES lift construction failed");
        for (int i = 0; i < b.dim(); ++i) lift_.at(i, j) = (*sol)[static_cast<size_t>(i)];
    }

    // preimage table for pulling back along the injection
    size_t total = 1;
    for (int i = 0; i < a.dim(); ++i) {
        total *= static_cast<size_t>(ma);
        if (total > 65536) throw SizeError("SES kernel too large for the preimage table");
    }
    ModVector cur(static_cast<size_t>(a.dim()), 0);
    for (size_t n = 0; n < total; ++n) {
        preimage_[apply_inj(cur)] = cur;
        for (int i = 0; i < a.dim(); ++i) {
            if (++cur[static_cast<size_t>(i)] < ma) break;
            cur[static_cast<size_t>(i)] = 0;
        }
    }
}

ModVector ModuleSES::apply_inj(const ModVector& a) const {
    return mat_vec(mid_->modulus(), inj_, a);
}

ModVector ModuleSES::apply_surj(const ModVector& b) const {
    return mat_vec(quot_->modulus(), surj_, b);
}

ModVector ModuleSES::lift(const ModVector& c) const {
    return mat_vec(mid_->modulus(), lift_, c);
}

ModVector ModuleSES::inj_preimage(const ModVector& v) const {
    auto it = preimage_.find(v);
    if (it == preimage_.end())
        throw ValidationError("vector is not in the image of the injection");
    return it->second;
}

Cochain connecting1_with_lift(const ModuleSES& ses, const Cochain& gamma,
                              const std::function<ModVector(const ModVector&)>& lift) {
    if (gamma.module != ses.quot() || gamma.degree != 1)
        throw ValidationError("connecting1 needs a 1-cochain valued in the quotient");
    if (!is_cocycle(gamma)) throw ValidationError("connecting1 input must be a cocycle");
    const GModule& b = *ses.mid();
    const PermGroup& g = *b.group();
    const int mb = b.modulus();
    const size_t s = gamma.span();

    std::vector<ModVector> lifted(s + 1);
    lifted[0] = ModVector(static_cast<size_t>(b.dim()), 0);
    for (size_t a = 1; a <= s; ++a) lifted[a] = lift(gamma.value1(static_cast<int>(a)));

    Cochain out = Cochain::zero(ses.sub(), 2);
    for (size_t a = 1; a <= s; ++a) {
        for (size_t h = 1; h <= s; ++h) {
            int ah = g.product_index(static_cast<int>(a), static_cast<int>(h));
            ModVector term = mat_vec(mb, b.action(static_cast<int>(a)), lifted[h]);
            for (size_t i = 0; i < term.size(); ++i) {
                term[i] = zmod::add(mb, term[i], lifted[a][i]);
                term[i] = zmod::sub(mb, term[i], lifted[static_cast<size_t>(ah)][i]);
            }
            out.set_value2(static_cast<int>(a), static_cast<int>(h), ses.inj_preimage(term));
        }
    }
    if (!is_cocycle(out)) throw ValidationError("connecting1 produced a non-cocycle");
    return out;
}

Cochain connecting1(const ModuleSES& ses, const Cochain& gamma) {
    return connecting1_with_lift(ses, gamma, [&](const ModVector& c) { return ses.lift(c); });
}

AffineGSet::AffineGSet(ModulePtr module, int npoints,
                       const std::vector<std::vector<int>>& gen_action,
                       std::vector<ModVector> difference, std::vector<std::string> labels)
    : module_(std::move(module)), npoints_(npoints), diff_(std::move(difference)),
      labels_(std::move(labels)) {
    const PermGroup& g = *module_->group();
    const int m = module_->modulus();
    if (npoints_ <= 0) throw ValidationError("torsor needs at least one point");
    size_t msize = 1;
    for (int i = 0; i < module_->dim(); ++i) msize *= static_cast<size_t>(m);
    if (msize != static_cast<size_t>(npoints_))
        throw ValidationError("torsor size must equal the module order");
    if (diff_.size() != static_cast<size_t>(npoints_) * npoints_)
        throw ValidationError("difference table has wrong size");
    if (gen_action.size() != g.generators().size())
        throw ValidationError("one action row per group generator required");
    if (labels_.empty()) {
        for (int p = 0; p < npoints_; ++p) labels_.push_back("p" + std::to_string(p));
    }

    // extend generator action to the whole group by word evaluation
    action_.assign(static_cast<size_t>(g.order()), {});
    std::vector<bool> known(static_cast<size_t>(g.order()), false);
    action_[0].resize(static_cast<size_t>(npoints_));
    for (int p = 0; p < npoints_; ++p) action_[0][static_cast<size_t>(p)] = p;
    known[0] = true;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int e = queue.front();
        queue.pop_front();
        for (size_t k = 0; k < gen_action.size(); ++k) {
            int gi = g.index_of(g.generators()[k]);
            int prod = g.product_index(gi, e);
            std::vector<int> val(static_cast<size_t>(npoints_));
            for (int p = 0; p < npoints_; ++p)
                val[static_cast<size_t>(p)] =
                    gen_action[k][static_cast<size_t>(action_[static_cast<size_t>(e)]
                                                          [static_cast<size_t>(p)])];
            if (!known[static_cast<size_t>(prod)]) {
                action_[static_cast<size_t>(prod)] = std::move(val);
                known[static_cast<size_t>(prod)] = true;
                queue.push_back(prod);
            } else if (action_[static_cast<size_t>(prod)] != val) {
                throw ValidationError("torsor action is inconsistent with the group relations");
            }
        }
    }

    // difference-map axioms
    for (int p = 0; p < npoints_; ++p)
        for (int q = 0; q < npoints_; ++q) {
            const ModVector& dpq = this->difference(p, q);
            if (dpq.size() != static_cast<size_t>(module_->dim()))
                throw ValidationError("difference vectors must have module dimension");
        }
    const bool exhaustive = npoints_ <= 64;
    std::mt19937_64 rng(0xC0C0);
    auto check_triple = [&](int p, int q, int r) {
        const ModVector& a = this->difference(p, q);
        const ModVector& b = this->difference(q, r);
        const ModVector& c = this->difference(p, r);
        for (size_t i = 0; i < a.size(); ++i)
            if (zmod::add(m, a[i], b[i]) != c[i])
                throw ValidationError("difference map violates the cocycle identity");
    };
    if (exhaustive) {
        for (int p = 0; p < npoints_; ++p)
            for (int q = 0; q < npoints_; ++q)
                for (int r = 0; r < npoints_; ++r) check_triple(p, q, r);
    } else {
        for (int n = 0; n < 100000; ++n)
            check_triple(static_cast<int>(rng() % npoints_), static_cast<int>(rng() % npoints_),
                         static_cast<int>(rng() % npoints_));
    }
    // p -> difference(p, q) is a bijection for each q
    for (int q = 0; q < npoints_; ++q) {
        std::set<ModVector> seen;
        for (int p = 0; p < npoints_; ++p) seen.insert(this->difference(p, q));
        if (seen.size() != static_cast<size_t>(npoints_))
            throw ValidationError("difference map is not bijective in the first slot");
    }
    // equivariance on generators
    for (const Perm& gen : g.generators()) {
        int gi = g.index_of(gen);
        for (int p = 0; p < npoints_; ++p)
            for (int q = 0; q < npoints_; ++q) {
                ModVector lhs = this->difference(act(gi, p), act(gi, q));
                ModVector rhs = module_->act(gi, this->difference(p, q));
                if (lhs != rhs) throw ValidationError("difference map is not equivariant");
            }
    }
}

std::vector<int> AffineGSet::fixed_points() const {
    std::vector<int> out;
    const PermGroup& g = *module_->group();
    for (int p = 0; p < npoints_; ++p) {
        bool fixed = true;
        for (const Perm& gen : g.generators())
            if (act(g.index_of(gen), p) != p) {
                fixed = false;
                break;
            }
        if (fixed) out.push_back(p);
    }
    return out;
}

std::vector<int> AffineGSet::fixed_points_under(const Perm& g) const {
    int gi = module_->group()->index_of(g);
    if (gi < 0) throw ValidationError("element not in the torsor's group");
    std::vector<int> out;
    for (int p = 0; p < npoints_; ++p)
        if (act(gi, p) == p) out.push_back(p);
    return out;
}

TorsorClassResult torsor_class(const AffineGSet& t) {
    CohClass cls = torsor_class_with_base(t, 0);
    std::optional<Cochain> witness = coboundary_preimage(cls.rep);
    std::vector<int> fixed = t.fixed_points();
    bool trivial = witness.has_value();
    if (trivial != !fixed.empty())
        throw std::logic_error("torsor triviality and fixed-point search disagree");
    return TorsorClassResult{std::move(cls), trivial, std::move(fixed), std::move(witness)};
}

CohClass torsor_class_with_base(const AffineGSet& t, int base_point) {
    if (base_point < 0 || base_point >= t.size())
        throw ValidationError("base point out of range");
    Cochain zeta = Cochain::zero(t.module(), 1);
    const size_t s = zeta.span();
    for (size_t a = 1; a <= s; ++a)
        zeta.set_value1(static_cast<int>(a),
                        t.difference(t.act(static_cast<int>(a), base_point), base_point));
    return CohClass(std::move(zeta));
}

CohClass restrict_class(const CohClass& x, const GroupPtr& subgroup) {
    return CohClass(restrict_cochain(x.rep, subgroup));
}

}  // namespace selfcup
