#pragma once

// Permutations of {0..degree-1} as fixed-length image arrays.
// Composition is the hot loop of every enumeration, so elements are flat
// vectors; cycle notation appears only at I/O boundaries (1-based there).
//
// Convention: permutations act on the right. (a * b) means "apply a, then b",
// so i^(a*b) = (i^a)^b and the conjugate a^g equals g^-1 * a * g.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace sylowlab {

using Point = std::uint16_t;

class Permutation {
public:
    Permutation() = default;

    explicit Permutation(unsigned degree) : images_(degree) {
        for (unsigned i = 0; i < degree; ++i) images_[i] = static_cast<Point>(i);
    }

    static Permutation from_images(std::vector<Point> images) {
        std::vector<bool> seen(images.size(), false);
        for (Point p : images) {
            if (p >= images.size() || seen[p])
                throw DomainError("image sequence is not a bijection");
            seen[p] = true;
        }
        Permutation g;
        g.images_ = std::move(images);
        return g;
    }

    unsigned degree() const { return static_cast<unsigned>(images_.size()); }

    Point operator[](unsigned i) const { return images_[i]; }

    const std::vector<Point>& images() const { return images_; }

    bool is_identity() const {
        for (unsigned i = 0; i < degree(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    // apply lhs, then rhs
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        Permutation r;
        r.images_.resize(a.images_.size());
        for (std::size_t i = 0; i < a.images_.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.images_.resize(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
        return r;
    }

    // g^-1 * (*this) * g, computed in one pass
    Permutation conjugated_by(const Permutation& g) const {
        Permutation r;
        r.images_.resize(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) r.images_[g.images_[i]] = g.images_[images_[i]];
        return r;
    }

    Permutation pow(std::uint64_t e) const {
        Permutation base = *this, acc{degree()};
        while (e > 0) {
            if (e & 1) acc = acc * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return acc;
    }

    // least k >= 1 with (*this)^k = id; lcm of cycle lengths
    std::uint64_t order() const {
        std::uint64_t result = 1;
        std::vector<bool> seen(images_.size(), false);
        for (unsigned start = 0; start < images_.size(); ++start) {
            if (seen[start]) continue;
            std::uint64_t len = 0;
            for (unsigned i = start; !seen[i]; i = images_[i]) {
                seen[i] = true;
                ++len;
            }
            result = std::lcm(result, len);
        }
        return result;
    }

    std::vector<std::vector<Point>> cycles() const {
        std::vector<std::vector<Point>> out;
        std::vector<bool> seen(images_.size(), false);
        for (unsigned start = 0; start < images_.size(); ++start) {
            if (seen[start] || images_[start] == start) {
                seen[start] = true;
                continue;
            }
            std::vector<Point> cyc;
            for (unsigned i = start; !seen[i]; i = images_[i]) {
                seen[i] = true;
                cyc.push_back(static_cast<Point>(i));
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) = default;

    // lexicographic on image sequences: the canonical element order
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

    std::uint64_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (Point p : images_) {
            h ^= p;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    std::vector<Point> images_;
};

struct PermHash {
    std::size_t operator()(const Permutation& p) const { return static_cast<std::size_t>(p.hash()); }
};

// Parses a product of disjoint cycles over 1..degree, e.g. "(1 2 3)(4 5)".
// "()" is the identity. Commas and whitespace both separate points.
inline Permutation parse_permutation(const std::string& text, unsigned degree) {
    std::vector<Point> images(degree);
    for (unsigned i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
    std::vector<bool> used(degree, false);

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw ParseError("empty permutation text");
    bool any_cycle = false;
    while (pos < text.size()) {
        if (text[pos] != '(') throw ParseError("expected '(' in cycle notation: " + text);
        ++pos;
        std::vector<unsigned> cycle;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            if (!isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("malformed cycle text: " + text);
            unsigned v = 0;
            while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + static_cast<unsigned>(text[pos] - '0');
                if (v > 1000000) throw ParseError("point out of range: " + text);
                ++pos;
            }
            if (v < 1 || v > degree)
                throw ParseError("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
            if (used[v - 1]) throw ParseError("repeated point " + std::to_string(v) + " in cycle list");
            used[v - 1] = true;
            cycle.push_back(v - 1);
            skip_ws();
        }
        if (pos == text.size()) throw ParseError("unterminated cycle: " + text);
        ++pos;  // ')'
        if (cycle.size() == 1) throw ParseError("singleton cycle in: " + text);
        for (std::size_t i = 0; i < cycle.size(); ++i)
            images[cycle[i]] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
        any_cycle = true;
        skip_ws();
    }
    if (!any_cycle) throw ParseError("no cycles in: " + text);
    return Permutation::from_images(std::move(images));
}

// Canonical cycle form, 1-based: cycles ordered by least moved point, each
// cycle starting at its least point; identity renders as "()".
inline std::string format_permutation(const Permutation& p) {
    auto cycs = p.cycles();
    if (cycs.empty()) return "()";
    std::string out;
    for (const auto& cyc : cycs) {
        out += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(cyc[i] + 1);
        }
        out += ')';
    }
    return out;
}

}  // namespace sylowlab
