#include "selfcup/cochain.hpp"

#include "selfcup/errors.hpp"
#include "selfcup/zmod.hpp"

namespace selfcup {

namespace {

// dst += A * src  or  dst -= A * src, raw slices of length dim
void axpy_mat(int m, const Mat& a, const uint8_t* src, uint8_t* dst, bool negate) {
    for (int i = 0; i < a.rows; ++i) {
        int acc = 0;
        for (int j = 0; j < a.cols; ++j) acc += a.at(i, j) * src[j];
        acc %= m;
        dst[i] = negate ? zmod::sub(m, dst[i], static_cast<uint8_t>(acc))
                        : zmod::add(m, dst[i], static_cast<uint8_t>(acc));
    }
}

void axpy_vec(int m, const uint8_t* src, uint8_t* dst, bool negate, int dim) {
    for (int i = 0; i < dim; ++i)
        dst[i] = negate ? zmod::sub(m, dst[i], src[i]) : zmod::add(m, dst[i], src[i]);
}

}  // namespace

Cochain Cochain::zero(ModulePtr module, int degree) {
    if (degree < 0 || degree > 3) throw ValidationError("cochain degree must be 0..3");
    Cochain c;
    c.degree = degree;
    c.module = std::move(module);
    size_t n = static_cast<size_t>(c.module->dim());
    size_t s = c.span();
    for (int i = 0; i < degree; ++i) n *= s;
    c.data.assign(n, 0);
    return c;
}

size_t Cochain::tuples() const {
    size_t n = 1;
    for (int i = 0; i < degree; ++i) n *= span();
    return n;
}

ModVector Cochain::value1(int g) const {
    if (degree != 1) throw ValidationError("value1 needs a 1-cochain");
    if (g == 0) return ModVector(static_cast<size_t>(dim()), 0);
    const uint8_t* p = at(static_cast<size_t>(g - 1));
    return ModVector(p, p + dim());
}

ModVector Cochain::value2(int g, int h) const {
    if (degree != 2) throw ValidationError("value2 needs a 2-cochain");
    if (g == 0 || h == 0) return ModVector(static_cast<size_t>(dim()), 0);
    const uint8_t* p = at(static_cast<size_t>(g - 1) * span() + static_cast<size_t>(h - 1));
    return ModVector(p, p + dim());
}

void Cochain::set_value1(int g, const ModVector& v) {
    if (g == 0) throw ValidationError("normalized cochains vanish on the identity");
    std::copy(v.begin(), v.end(), at(static_cast<size_t>(g - 1)));
}

void Cochain::set_value2(int g, int h, const ModVector& v) {
    if (g == 0 || h == 0) throw ValidationError("normalized cochains vanish on the identity");
    std::copy(v.begin(), v.end(),
              at(static_cast<size_t>(g - 1) * span() + static_cast<size_t>(h - 1)));
}

bool Cochain::is_zero() const {
    for (uint8_t v : data)
        if (v) return false;
    return true;
}

Cochain Cochain::operator+(const Cochain& rhs) const {
    if (module != rhs.module || degree != rhs.degree)
        throw ValidationError("cochain mismatch in +");
    Cochain out = *this;
    const int m = module->modulus();
    for (size_t i = 0; i < data.size(); ++i) out.data[i] = zmod::add(m, data[i], rhs.data[i]);
    return out;
}

Cochain Cochain::operator-(const Cochain& rhs) const {
    if (module != rhs.module || degree != rhs.degree)
        throw ValidationError("cochain mismatch in -");
    Cochain out = *this;
    const int m = module->modulus();
    for (size_t i = 0; i < data.size(); ++i) out.data[i] = zmod::sub(m, data[i], rhs.data[i]);
    return out;
}

Cochain Cochain::operator-() const {
    Cochain out = *this;
    const int m = module->modulus();
    for (size_t i = 0; i < data.size(); ++i) out.data[i] = zmod::neg(m, data[i]);
    return out;
}

Cochain coboundary(const Cochain& c) {
    if (c.degree >= 3) throw UnsupportedError("coboundary of degree-3 cochains is unsupported");
    const GModule& mod = *c.module;
    const PermGroup& g = *mod.group();
    const int m = mod.modulus();
    const int d = mod.dim();
    const size_t s = c.span();
    Cochain out = Cochain::zero(c.module, c.degree + 1);

    if (c.degree == 0) {
        // (dv)(g) = g.v - v
        const uint8_t* v = c.data.data();
        for (size_t a = 1; a <= s; ++a) {
            uint8_t* dst = out.at(a - 1);
            axpy_mat(m, mod.action(static_cast<int>(a)), v, dst, false);
            axpy_vec(m, v, dst, true, d);
        }
        return out;
    }

    if (c.degree == 1) {
        // (dc)(g,h) = g.c(h) - c(gh) + c(g)
        for (size_t a = 1; a <= s; ++a) {
            const Mat& act_a = mod.action(static_cast<int>(a));
            for (size_t b = 1; b <= s; ++b) {
                uint8_t* dst = out.at((a - 1) * s + (b - 1));
                axpy_mat(m, act_a, c.at(b - 1), dst, false);
                int ab = g.product_index(static_cast<int>(a), static_cast<int>(b));
                if (ab != 0) axpy_vec(m, c.at(static_cast<size_t>(ab) - 1), dst, true, d);
                axpy_vec(m, c.at(a - 1), dst, false, d);
            }
        }
        return out;
    }

    // (dc)(g,h,k) = g.c(h,k) - c(gh,k) + c(g,hk) - c(g,h)
    for (size_t a = 1; a <= s; ++a) {
        const Mat& act_a = mod.action(static_cast<int>(a));
        for (size_t b = 1; b <= s; ++b) {
            int ab = g.product_index(static_cast<int>(a), static_cast<int>(b));
            for (size_t e = 1; e <= s; ++e) {
                uint8_t* dst = out.at(((a - 1) * s + (b - 1)) * s + (e - 1));
                axpy_mat(m, act_a, c.at((b - 1) * s + (e - 1)), dst, false);
                if (ab != 0) axpy_vec(m, c.at((static_cast<size_t>(ab) - 1) * s + (e - 1)), dst, true, d);
                int be = g.product_index(static_cast<int>(b), static_cast<int>(e));
                if (be != 0) axpy_vec(m, c.at((a - 1) * s + (static_cast<size_t>(be) - 1)), dst, false, d);
                axpy_vec(m, c.at((a - 1) * s + (b - 1)), dst, true, d);
            }
        }
    }
    return out;
}

bool is_cocycle(const Cochain& c) { return coboundary(c).is_zero(); }

Cochain restrict_cochain(const Cochain& c, const GroupPtr& subgroup) {
    ModulePtr rmod = restrict_module(c.module, subgroup);
    Cochain out = Cochain::zero(rmod, c.degree);
    const PermGroup& g = *c.module->group();
    const PermGroup& h = *subgroup;
    const size_t hs = out.span();
    const int d = c.dim();

    // element index translation H -> G (identity maps to identity)
    std::vector<size_t> to_g(hs + 1);
    for (size_t i = 1; i <= hs; ++i)
        to_g[i] = static_cast<size_t>(g.index_of(h.element(static_cast<int>(i))));

    if (c.degree == 0) {
        out.data = c.data;
        return out;
    }
    if (c.degree == 1) {
        for (size_t a = 1; a <= hs; ++a)
            std::copy_n(c.at(to_g[a] - 1), d, out.at(a - 1));
        return out;
    }
    if (c.degree == 2) {
        for (size_t a = 1; a <= hs; ++a)
            for (size_t b = 1; b <= hs; ++b)
                std::copy_n(c.at((to_g[a] - 1) * c.span() + (to_g[b] - 1)), d,
                            out.at((a - 1) * hs + (b - 1)));
        return out;
    }
    throw UnsupportedError("restriction implemented for degrees 0..2");
}

Cochain map_cochain(const Cochain& c, const Mat& f, const ModulePtr& target) {
    if (target->group() != c.module->group() || target->modulus() != c.module->modulus())
        throw ValidationError("map_cochain: target module mismatch");
    if (f.rows != target->dim() || f.cols != c.module->dim())
        throw ValidationError("map_cochain: map shape mismatch");
    const int m = c.module->modulus();
    // equivariance on generators: act_target(g) f = f act_src(g)
    for (const Perm& gen : c.module->group()->generators()) {
        int gi = c.module->group()->index_of(gen);
        if (!(mat_mul(m, target->action(gi), f) == mat_mul(m, f, c.module->action(gi))))
            throw ValidationError("map_cochain: map is not equivariant");
    }
    Cochain out = Cochain::zero(target, c.degree);
    const size_t n = c.tuples();
    for (size_t t = 0; t < n; ++t) {
        const uint8_t* src = c.at(t);
        uint8_t* dst = out.at(t);
        for (int i = 0; i < f.rows; ++i) {
            int acc = 0;
            for (int j = 0; j < f.cols; ++j) acc += f.at(i, j) * src[j];
            dst[i] = static_cast<uint8_t>(acc % m);
        }
    }
    return out;
}

}  // namespace selfcup
