#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations in one-line notation, pattern containment and layered patterns.
 *
 * A pattern is just a Permutation used as the second argument of contains().
 * Values are 1-based: a permutation of length n is a rearrangement of 1..n.
 */

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace layered_cheb {

class Permutation {
public:
    Permutation() = default;

    /// Throws std::invalid_argument unless `values` is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> values);
    Permutation(std::initializer_list<int> values);

    /// The identity (1,2,...,n).
    static Permutation identity(int n);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    /// 0-based access to the entry at position i+1.
    int operator[](std::size_t i) const { return values_[i]; }
    std::span<const int> values() const noexcept { return values_; }

    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    std::string to_string() const;

private:
    std::vector<int> values_;
};

/// Composition (k_1,...,k_p) of k naming the layered pattern w(k_1,...,k_p).
class LayeredShape {
public:
    /// Throws std::invalid_argument on an empty composition or a part < 1.
    explicit LayeredShape(std::vector<int> parts);
    LayeredShape(std::initializer_list<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    int layers() const noexcept { return static_cast<int>(parts_.size()); }
    int length() const noexcept { return length_; }

    bool operator==(const LayeredShape&) const = default;

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int length_ = 0;
};

/// A finite set of nonempty patterns, kept sorted and free of duplicates.
class PatternSet {
public:
    PatternSet() = default;
    /// Throws std::invalid_argument on an empty pattern or a duplicate.
    explicit PatternSet(std::vector<Permutation> patterns);
    PatternSet(std::initializer_list<Permutation> patterns);

    std::span<const Permutation> patterns() const noexcept { return patterns_; }
    std::size_t size() const noexcept { return patterns_.size(); }
    bool empty() const noexcept { return patterns_.empty(); }
    bool contains_pattern(const Permutation& p) const;

    bool operator==(const PatternSet&) const = default;

    std::string to_string() const;

private:
    std::vector<Permutation> patterns_;
};

/// True iff `perm` has an occurrence of `pattern`. Rejects the empty pattern.
bool contains(const Permutation& perm, const Permutation& pattern);

/// True iff `perm` avoids every pattern of `patterns`. Rejects an empty set.
bool avoids_all(const Permutation& perm, const PatternSet& patterns);

/// w(k_1,...,k_p): layers decrease internally and increase from one layer to the next.
Permutation layered(const LayeredShape& shape);

/// Inverse of layered(); nullopt if `perm` is not layered. Rejects the empty permutation.
std::optional<LayeredShape> layer_decomposition(const Permutation& perm);

Permutation reverse(const Permutation& perm);
Permutation complement(const Permutation& perm);

/// Length of the longest strictly increasing subsequence.
std::size_t longest_increasing_length(const Permutation& perm);

/// The pair {(1,2,3), w(k-d,d)}. Requires k >= 2 and 1 <= d <= k-1.
PatternSet layered_pair(int d, int k);

}  // namespace layered_cheb
