#pragma once

#include "selfcup/gmodule.hpp"

namespace selfcup {

/// Normalized bar-resolution k-cochain on (G, M), k in {0,1,2,3}.  Values are
/// stored flat for tuples of NON-identity elements only; any tuple containing
/// the identity evaluates to 0 implicitly.  With S = |G| - 1 and element
/// indices g_i in 1..S, the tuple (g_1,...,g_k) lives at flat index
/// (g_1 - 1) * S^(k-1) + ... + (g_k - 1), and coordinate i of its value at
/// flat_index * dim + i.  Reports and serialized classes use this ordering.
struct Cochain {
    int degree = 0;
    ModulePtr module;
    DenseVec data;

    static Cochain zero(ModulePtr module, int degree);

    size_t span() const { return static_cast<size_t>(module->group()->order()) - 1; }
    size_t tuples() const;
    int dim() const { return module->dim(); }

    /// Value slice for a flat tuple index.
    const uint8_t* at(size_t tuple_index) const {
        return data.data() + tuple_index * static_cast<size_t>(dim());
    }
    uint8_t* at(size_t tuple_index) {
        return data.data() + tuple_index * static_cast<size_t>(dim());
    }

    /// Value on one or two group elements given by element index (0 = id).
    ModVector value1(int g) const;
    ModVector value2(int g, int h) const;
    void set_value1(int g, const ModVector& v);
    void set_value2(int g, int h, const ModVector& v);

    bool is_zero() const;
    Cochain operator+(const Cochain& rhs) const;
    Cochain operator-(const Cochain& rhs) const;
    Cochain operator-() const;
};

/// Bar differential; degree 3 input is unsupported.
Cochain coboundary(const Cochain& c);
bool is_cocycle(const Cochain& c);

/// Restricts values to tuples from the subgroup (module gets restricted too).
Cochain restrict_cochain(const Cochain& c, const GroupPtr& subgroup);

/// Applies an equivariant linear map to every value; `f` maps
/// c.module -> target (same group, same modulus).
Cochain map_cochain(const Cochain& c, const Mat& f, const ModulePtr& target);

}  // namespace selfcup
