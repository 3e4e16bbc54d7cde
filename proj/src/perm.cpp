#include "selfcup/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "selfcup/errors.hpp"

namespace selfcup {

Perm Perm::identity(int n) {
    std::vector<uint8_t> im(static_cast<size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    Perm p;
    p.images_ = std::move(im);
    return p;
}

Perm::Perm(std::vector<uint8_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (uint8_t v : images_) {
        if (v >= images_.size() || seen[v])
            throw ValidationError("permutation images are not a bijection");
        seen[v] = true;
    }
}

Perm Perm::operator*(const Perm& rhs) const {
    if (degree() != rhs.degree())
        throw ValidationError("permutation degree mismatch");
    Perm out;
    out.images_.resize(images_.size());
    for (size_t x = 0; x < images_.size(); ++x)
        out.images_[x] = images_[rhs.images_[x]];
    return out;
}

Perm Perm::inverse() const {
    Perm out;
    out.images_.resize(images_.size());
    for (size_t x = 0; x < images_.size(); ++x)
        out.images_[images_[x]] = static_cast<uint8_t>(x);
    return out;
}

bool Perm::is_identity() const {
    for (size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != x) return false;
    return true;
}

int Perm::order() const {
    int ord = 1;
    for (int len : cycle_type()) ord = std::lcm(ord, len);
    return ord;
}

int Perm::sign() const {
    int s = 1;
    for (int len : cycle_type())
        if (len % 2 == 0) s = -s;
    return s;
}

std::vector<int> Perm::cycle_type() const {
    std::vector<int> type;
    std::vector<bool> seen(images_.size(), false);
    for (size_t x = 0; x < images_.size(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        size_t y = x;
        do {
            seen[y] = true;
            y = images_[y];
            ++len;
        } while (y != x);
        type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
}

Perm parse_cycles(const std::string& text, int n) {
    std::vector<uint8_t> im(static_cast<size_t>(n));
    std::iota(im.begin(), im.end(), 0);

    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i < text.size() && (text.compare(i, 2, "id") == 0 || text[i] == 'e')) {
        i += text[i] == 'e' ? 1 : 2;
        skip_ws();
        if (i != text.size()) throw ValidationError("trailing input after identity: " + text);
        return Perm(std::move(im));
    }

    bool any_cycle = false;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '(') throw ValidationError("expected '(' in cycle notation: " + text);
        ++i;
        std::vector<int> cycle;
        for (;;) {
            skip_ws();
            if (i >= text.size()) throw ValidationError("unterminated cycle: " + text);
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (text[i] == ',') {  // commas inside a cycle are tolerated
                ++i;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ValidationError("unexpected character in cycle: " + text);
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            if (v < 1 || v > n)
                throw ValidationError("cycle point out of range 1.." + std::to_string(n) + ": " +
                                      std::to_string(v));
            cycle.push_back(v - 1);
        }
        any_cycle = true;
        for (size_t k = 0; k + 1 < cycle.size(); ++k) {
            if (im[static_cast<size_t>(cycle[k])] != cycle[k])
                throw ValidationError("cycles are not disjoint: " + text);
        }
        // (a b c) maps a->b, b->c, c->a
        for (size_t k = 0; k < cycle.size(); ++k) {
            int from = cycle[k];
            int to = cycle[(k + 1) % cycle.size()];
            if (cycle.size() > 1 && im[static_cast<size_t>(from)] != from)
                throw ValidationError("cycles are not disjoint: " + text);
            im[static_cast<size_t>(from)] = static_cast<uint8_t>(to);
        }
        skip_ws();
    }
    if (!any_cycle && text.find('(') == std::string::npos)
        throw ValidationError("empty permutation text");
    return Perm(std::move(im));
}

std::vector<Perm> parse_generator_list(const std::string& text, int n) {
    // split on commas that are outside parentheses
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);

    std::vector<Perm> gens;
    for (const std::string& part : parts) {
        bool blank = true;
        for (char ch : part)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (blank) continue;
        gens.push_back(parse_cycles(part, n));
    }
    return gens;
}

std::string format_cycles(const Perm& p) {
    std::ostringstream out;
    std::vector<bool> seen(static_cast<size_t>(p.degree()), false);
    bool any = false;
    for (int x = 0; x < p.degree(); ++x) {
        if (seen[static_cast<size_t>(x)] || p(x) == x) continue;
        any = true;
        out << '(';
        int y = x;
        bool first = true;
        do {
            seen[static_cast<size_t>(y)] = true;
            if (!first) out << ' ';
            out << (y + 1);
            first = false;
            y = p(y);
        } while (y != x);
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

}  // namespace selfcup
