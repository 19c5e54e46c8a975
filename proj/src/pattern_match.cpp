#include "layered_cheb/pattern_match.hpp"

#include <stdexcept>

namespace layered_cheb {

CompiledPattern::CompiledPattern(const Permutation& pattern)
    : values_(pattern.begin(), pattern.end()),
      below_(pattern.size(), -1),
      above_(pattern.size(), -1) {
    if (pattern.empty()) {
        throw std::invalid_argument("the empty pattern is not allowed");
    }
    const int k = length();
    for (int t = 0; t < k; ++t) {
        for (int s = 0; s < t; ++s) {
            if (values_[s] < values_[t] && (below_[t] < 0 || values_[s] > values_[below_[t]])) {
                below_[t] = s;
            }
            if (values_[s] > values_[t] && (above_[t] < 0 || values_[s] < values_[above_[t]])) {
                above_[t] = s;
            }
        }
    }
}

bool CompiledPattern::occurs_in(std::span<const int> seq) const {
    const int n = static_cast<int>(seq.size());
    if (length() > n) return false;
    std::vector<int> chosen(values_.size());
    return extend(seq, 0, 0, n, chosen);
}

bool CompiledPattern::occurs_ending_at_last(std::span<const int> seq) const {
    const int n = static_cast<int>(seq.size());
    const int k = length();
    if (k > n) return false;
    const int last_value = seq[n - 1];
    const int last_rank = values_[k - 1];
    std::vector<int> chosen(values_.size());
    chosen[k - 1] = n - 1;
    // Each entry used before the final one must sit on the correct side of it.
    auto side_ok = [&](int t, int index) {
        return (values_[t] < last_rank) == (seq[index] < last_value);
    };
    // Plain recursion over positions 0..k-2 restricted to indices < n-1.
    auto rec = [&](auto&& self, int pos, int next_index) -> bool {
        if (pos == k - 1) {
            const int lo = below_[pos];
            const int hi = above_[pos];
            return (lo < 0 || seq[chosen[lo]] < last_value) &&
                   (hi < 0 || seq[chosen[hi]] > last_value);
        }
        const int remaining = k - 1 - pos;
        for (int index = next_index; index <= n - 1 - remaining; ++index) {
            const int v = seq[index];
            if (!side_ok(pos, index)) continue;
            if (below_[pos] >= 0 && seq[chosen[below_[pos]]] > v) continue;
            if (above_[pos] >= 0 && seq[chosen[above_[pos]]] < v) continue;
            chosen[pos] = index;
            if (self(self, pos + 1, index + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

bool CompiledPattern::extend(std::span<const int> seq, int pos, int next_index, int limit,
                             std::vector<int>& chosen) const {
    const int k = length();
    if (pos == k) return true;
    const int remaining = k - pos;
    for (int index = next_index; index <= limit - remaining; ++index) {
        const int v = seq[index];
        if (below_[pos] >= 0 && seq[chosen[below_[pos]]] > v) continue;
        if (above_[pos] >= 0 && seq[chosen[above_[pos]]] < v) continue;
        chosen[pos] = index;
        if (extend(seq, pos + 1, index + 1, limit, chosen)) return true;
    }
    return false;
}

CompiledPatternSet::CompiledPatternSet(const PatternSet& patterns) {
    compiled_.reserve(patterns.size());
    for (const auto& p : patterns.patterns()) compiled_.emplace_back(p);
}

bool CompiledPatternSet::any_occurs_in(std::span<const int> seq) const {
    for (const auto& p : compiled_) {
        if (p.occurs_in(seq)) return true;
    }
    return false;
}

bool CompiledPatternSet::any_occurs_ending_at_last(std::span<const int> seq) const {
    for (const auto& p : compiled_) {
        if (p.occurs_ending_at_last(seq)) return true;
    }
    return false;
}

}  // namespace layered_cheb
