#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace selfcup {

/// Permutation of {0,...,n-1}, stored as the image vector.
class Perm {
public:
    Perm() = default;
    static Perm identity(int n);
    /// Validates that `images` is a bijection on {0..n-1}.
    explicit Perm(std::vector<uint8_t> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<size_t>(x)]; }
    const std::vector<uint8_t>& images() const { return images_; }

    /// (a * b)(x) = a(b(x)).
    Perm operator*(const Perm& rhs) const;
    Perm inverse() const;
    bool is_identity() const;
    int order() const;
    /// +1 for even permutations, -1 for odd.
    int sign() const;
    /// Sorted multiset of cycle lengths (including fixed points).
    std::vector<int> cycle_type() const;

    bool operator==(const Perm& rhs) const { return images_ == rhs.images_; }
    bool operator<(const Perm& rhs) const { return images_ < rhs.images_; }

private:
    std::vector<uint8_t> images_;
};

/// Parses 1-based disjoint cycle notation, e.g. "(1 2)(3 4)".
/// "()", "e" and "id" denote the identity.  Points must lie in 1..n.
Perm parse_cycles(const std::string& text, int n);

/// Parses a comma-separated generator list, e.g. "(1 2)(5 6), (3 4)(5 6)".
std::vector<Perm> parse_generator_list(const std::string& text, int n);

/// Formats as 1-based disjoint cycles; identity prints as "()".
std::string format_cycles(const Perm& p);

}  // namespace selfcup
