#pragma once

// Occurrence search shared by contains() and the pruned enumerators.
//
// A pattern is compiled once into, for each position t, the earlier positions
// holding the nearest smaller and nearest larger value. A partial embedding is
// then order-isomorphic iff every newly chosen entry lies strictly between the
// entries embedded at those two positions.

#include <span>
#include <vector>

#include "layered_cheb/permutation.hpp"

namespace layered_cheb {

class CompiledPattern {
public:
    explicit CompiledPattern(const Permutation& pattern);

    int length() const noexcept { return static_cast<int>(values_.size()); }

    /// True iff `seq` (distinct integers, any range) contains the pattern.
    bool occurs_in(std::span<const int> seq) const;

    /// True iff `seq` has an occurrence whose last entry is the last entry of `seq`.
    /// When seq without its last entry avoids the pattern, this is exactly
    /// the question whether appending that entry created an occurrence.
    bool occurs_ending_at_last(std::span<const int> seq) const;

private:
    bool extend(std::span<const int> seq, int pos, int next_index, int limit,
                std::vector<int>& chosen) const;

    std::vector<int> values_;
    // -1 when no earlier position is smaller (resp. larger).
    std::vector<int> below_;
    std::vector<int> above_;
};

/// Compiled form of a PatternSet.
class CompiledPatternSet {
public:
    explicit CompiledPatternSet(const PatternSet& patterns);

    bool any_occurs_in(std::span<const int> seq) const;
    bool any_occurs_ending_at_last(std::span<const int> seq) const;

    std::span<const CompiledPattern> patterns() const noexcept { return compiled_; }

private:
    std::vector<CompiledPattern> compiled_;
};

}  // namespace layered_cheb
