#include "layered_cheb/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "layered_cheb/pattern_match.hpp"

namespace layered_cheb {

namespace {

std::string join(std::span<const int> values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    const auto n = values_.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : values_) {
        if (v < 1 || static_cast<std::size_t>(v) > n) {
            throw std::invalid_argument("permutation entry " + std::to_string(v) +
                                        " is outside 1.." + std::to_string(n));
        }
        if (seen[v]) {
            throw std::invalid_argument("permutation entry " + std::to_string(v) +
                                        " is repeated");
        }
        seen[v] = true;
    }
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("negative permutation length");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

std::string Permutation::to_string() const { return join(values_, ','); }

LayeredShape::LayeredShape(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("layered shape needs at least one layer");
    for (int part : parts_) {
        if (part < 1) throw std::invalid_argument("layer lengths must be positive");
        length_ += part;
    }
}

LayeredShape::LayeredShape(std::initializer_list<int> parts)
    : LayeredShape(std::vector<int>(parts)) {}

std::string LayeredShape::to_string() const { return join(parts_, ','); }

PatternSet::PatternSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
    for (const auto& p : patterns_) {
        if (p.empty()) throw std::invalid_argument("the empty pattern is not allowed");
    }
    std::sort(patterns_.begin(), patterns_.end());
    if (std::adjacent_find(patterns_.begin(), patterns_.end()) != patterns_.end()) {
        throw std::invalid_argument("duplicate pattern in pattern set");
    }
}

PatternSet::PatternSet(std::initializer_list<Permutation> patterns)
    : PatternSet(std::vector<Permutation>(patterns)) {}

bool PatternSet::contains_pattern(const Permutation& p) const {
    return std::binary_search(patterns_.begin(), patterns_.end(), p);
}

std::string PatternSet::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
        if (i) out += ';';
        out += patterns_[i].to_string();
    }
    return out;
}

bool contains(const Permutation& perm, const Permutation& pattern) {
    return CompiledPattern(pattern).occurs_in(perm.values());
}

bool avoids_all(const Permutation& perm, const PatternSet& patterns) {
    if (patterns.empty()) throw std::invalid_argument("pattern set must be nonempty");
    return !CompiledPatternSet(patterns).any_occurs_in(perm.values());
}

Permutation layered(const LayeredShape& shape) {
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(shape.length()));
    int offset = 0;
    for (int part : shape.parts()) {
        for (int v = offset + part; v > offset; --v) values.push_back(v);
        offset += part;
    }
    return Permutation(std::move(values));
}

std::optional<LayeredShape> layer_decomposition(const Permutation& perm) {
    if (perm.empty()) throw std::invalid_argument("the empty permutation has no layers");
    // A layer starting at position `start` (0-based) must hold exactly the values
    // start+1..start+len in decreasing order, so its first entry fixes its length.
    std::vector<int> parts;
    std::size_t start = 0;
    const std::size_t n = perm.size();
    while (start < n) {
        const int top = perm[start];
        const int len = top - static_cast<int>(start);
        if (len < 1 || start + static_cast<std::size_t>(len) > n) return std::nullopt;
        for (int i = 0; i < len; ++i) {
            if (perm[start + static_cast<std::size_t>(i)] != top - i) return std::nullopt;
        }
        parts.push_back(len);
        start += static_cast<std::size_t>(len);
    }
    return LayeredShape(std::move(parts));
}

Permutation reverse(const Permutation& perm) {
    std::vector<int> v(perm.begin(), perm.end());
    std::reverse(v.begin(), v.end());
    return Permutation(std::move(v));
}

Permutation complement(const Permutation& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<int> v;
    v.reserve(perm.size());
    for (int x : perm) v.push_back(n + 1 - x);
    return Permutation(std::move(v));
}

std::size_t longest_increasing_length(const Permutation& perm) {
    // Patience sorting: tails[i] is the least tail of an increasing run of length i+1.
    std::vector<int> tails;
    for (int x : perm) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end()) {
            tails.push_back(x);
        } else {
            *it = x;
        }
    }
    return tails.size();
}

PatternSet layered_pair(int d, int k) {
    if (k < 2 || d < 1 || d > k - 1) {
        throw std::invalid_argument("layered pair needs k >= 2 and 1 <= d <= k-1 (got d=" +
                                    std::to_string(d) + ", k=" + std::to_string(k) + ")");
    }
    return PatternSet{Permutation{1, 2, 3}, layered(LayeredShape{k - d, d})};
}

}  // namespace layered_cheb
