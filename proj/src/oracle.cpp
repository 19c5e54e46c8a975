#include "layered_cheb/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "layered_cheb/pattern_match.hpp"

namespace layered_cheb {

namespace {

void check_ceiling(int n, const OracleLimits& limits) {
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    if (n > limits.max_length) {
        throw ResourceLimitError("length " + std::to_string(n) + " exceeds the ceiling " +
                                 std::to_string(limits.max_length) +
                                 "; raise it explicitly to proceed");
    }
}

void bump(std::uint64_t& counter) {
    if (__builtin_add_overflow(counter, std::uint64_t{1}, &counter)) {
        throw std::overflow_error("avoider count overflowed 64 bits");
    }
}

// Fills positions [pos, n) of `seq` with the unused values, abandoning any
// branch whose newest entry completes a forbidden occurrence.
class PlacementSearch {
public:
    PlacementSearch(int n, const CompiledPatternSet& patterns)
        : n_(n), patterns_(patterns), seq_(static_cast<std::size_t>(n)), used_(n + 1, false) {}

    // Returns false when the pinned prefix already contains a pattern.
    bool pin(std::span<const int> prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            seq_[i] = prefix[i];
            used_[prefix[i]] = true;
            if (patterns_.any_occurs_ending_at_last(std::span<const int>(seq_.data(), i + 1))) {
                return false;
            }
        }
        depth_ = static_cast<int>(prefix.size());
        return true;
    }

    std::uint64_t run() {
        std::uint64_t total = 0;
        descend(depth_, total);
        return total;
    }

private:
    void descend(int pos, std::uint64_t& total) {
        if (pos == n_) {
            bump(total);
            return;
        }
        for (int v = 1; v <= n_; ++v) {
            if (used_[v]) continue;
            seq_[pos] = v;
            if (patterns_.any_occurs_ending_at_last(
                    std::span<const int>(seq_.data(), static_cast<std::size_t>(pos) + 1))) {
                continue;
            }
            used_[v] = true;
            descend(pos + 1, total);
            used_[v] = false;
        }
    }

    int n_;
    const CompiledPatternSet& patterns_;
    std::vector<int> seq_;
    std::vector<bool> used_;
    int depth_ = 0;
};

// Generating tree: the children of an avoider of length m are obtained by
// appending a value v in 1..m+1 and shifting the old entries >= v up by one.
class GeneratingTree {
public:
    GeneratingTree(int n_max, const CompiledPatternSet& patterns)
        : n_max_(n_max), patterns_(patterns), counts_(static_cast<std::size_t>(n_max) + 1, 0),
          levels_(static_cast<std::size_t>(n_max) + 1) {}

    std::vector<std::uint64_t> run() {
        counts_[0] = 1;
        grow(0);
        return counts_;
    }

private:
    void grow(int m) {
        if (m == n_max_) return;
        const auto& parent = levels_[static_cast<std::size_t>(m)];
        auto& child = levels_[static_cast<std::size_t>(m) + 1];
        child.resize(static_cast<std::size_t>(m) + 1);
        for (int v = 1; v <= m + 1; ++v) {
            for (int i = 0; i < m; ++i) {
                const int x = parent[static_cast<std::size_t>(i)];
                child[static_cast<std::size_t>(i)] = x >= v ? x + 1 : x;
            }
            child[static_cast<std::size_t>(m)] = v;
            if (patterns_.any_occurs_ending_at_last(child)) continue;
            bump(counts_[static_cast<std::size_t>(m) + 1]);
            grow(m + 1);
        }
    }

    int n_max_;
    const CompiledPatternSet& patterns_;
    std::vector<std::uint64_t> counts_;
    std::vector<std::vector<int>> levels_;
};

void require_patterns(const PatternSet& patterns) {
    if (patterns.empty()) throw std::invalid_argument("pattern set must be nonempty");
}

}  // namespace

BigInt binomial(long n, long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigInt result = 1;
    for (long i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;
    }
    return result;
}

BigInt count_avoiders(int n, const PatternSet& patterns, OracleLimits limits) {
    return count_with_prefix(n, {}, patterns, limits);
}

std::vector<BigInt> count_series(int n_max, const PatternSet& patterns, OracleLimits limits) {
    require_patterns(patterns);
    check_ceiling(n_max, limits);
    const CompiledPatternSet compiled(patterns);
    const auto counts = GeneratingTree(n_max, compiled).run();
    return {counts.begin(), counts.end()};
}

BigInt count_with_prefix(int n, std::span<const int> prefix, const PatternSet& patterns,
                         OracleLimits limits) {
    require_patterns(patterns);
    check_ceiling(n, limits);
    if (prefix.size() > static_cast<std::size_t>(n)) {
        throw std::invalid_argument("prefix is longer than the permutation");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : prefix) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("prefix entry " + std::to_string(v) + " is outside 1.." +
                                        std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(v)]) return 0;
        seen[static_cast<std::size_t>(v)] = true;
    }
    const CompiledPatternSet compiled(patterns);
    PlacementSearch search(n, compiled);
    if (!search.pin(prefix)) return 0;
    return search.run();
}

BigInt catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan index must be nonnegative");
    BigInt c = 1;
    for (int i = 0; i < n; ++i) {
        c *= 2 * (2 * i + 1);
        c /= i + 2;
    }
    return c;
}

void LayeredPair::validate() const {
    if (k < 3 || d < 1 || d > k - 1) {
        throw std::invalid_argument("layered pair needs k >= 3 and 1 <= d <= k-1 (got d=" +
                                    std::to_string(d) + ", k=" + std::to_string(k) + ")");
    }
}

LayeredPair LayeredPair::normalized() const { return {std::min(d, k - d), k}; }

std::vector<std::vector<int>> enumerate_index_set(const IndexSetSpec& spec) {
    const auto [kind, n, m, d, k] = spec;
    if (m < 1 || d < 1 || d >= k) {
        throw std::invalid_argument("index set needs m >= 1 and 1 <= d < k");
    }
    std::vector<std::vector<int>> out;
    // I and K live on n >= d+1, m <= min(n,k)-d; J is the same region shifted
    // down by one in n.
    if (kind == IndexSetKind::J) {
        if (n < d || m > std::min(n + 1, k) - d) return out;
    } else {
        if (n < d + 1 || m > std::min(n, k) - d) return out;
    }
    const int anchor = kind == IndexSetKind::J ? n - d + 2 : n - d + 1;
    std::vector<int> tuple(static_cast<std::size_t>(m));
    // Position j (0-based) ranges over [floor(j), tuple[j-1]-1] with
    // tuple[-1] = anchor; K lowers the floor of the last slot to 1.
    auto floor_of = [&](int j) {
        if (kind == IndexSetKind::K && j == m - 1) return 1;
        return kind == IndexSetKind::K ? m - 1 - j : m - j;
    };
    auto fill = [&](auto&& self, int j, int upper) -> void {
        if (j == m) {
            out.push_back(tuple);
            return;
        }
        for (int v = floor_of(j); v <= upper; ++v) {
            tuple[static_cast<std::size_t>(j)] = v;
            self(self, j + 1, v - 1);
        }
    };
    fill(fill, 0, anchor - 1);
    return out;
}

BigInt OracleContext::g_value(const PrefixQuery& query) {
    query.pair.validate();
    if (query.prefix.empty()) throw std::invalid_argument("prefix must be nonempty");
    std::vector<int> key{query.n, query.pair.d, query.pair.k};
    key.insert(key.end(), query.prefix.begin(), query.prefix.end());
    if (auto it = g_cache_.find(key); it != g_cache_.end()) return it->second;
    BigInt value = count_with_prefix(query.n, query.prefix, query.pair.patterns(), limits_);
    g_cache_.emplace(std::move(key), value);
    return value;
}

BigInt OracleContext::a_value(int n, int m, LayeredPair pair) {
    pair.validate();
    if (n < pair.d + 1 || m < 1 || m > pair.k - pair.d) {
        throw std::out_of_range("A(n,m) needs n >= d+1 and 1 <= m <= k-d (got n=" +
                                std::to_string(n) + ", m=" + std::to_string(m) + ")");
    }
    BigInt sum = 0;
    for (auto& prefix : enumerate_index_set({IndexSetKind::I, n, m, pair.d, pair.k})) {
        sum += g_value({n, pair, std::move(prefix)});
    }
    return sum;
}

BigInt OracleContext::b_value(int n, int m, LayeredPair pair) {
    pair.validate();
    if (n < pair.d || m < 1 || m > pair.k - pair.d) {
        throw std::out_of_range("B(n,m) needs n >= d and 1 <= m <= k-d (got n=" +
                                std::to_string(n) + ", m=" + std::to_string(m) + ")");
    }
    BigInt sum = 0;
    for (auto& prefix : enumerate_index_set({IndexSetKind::J, n, m, pair.d, pair.k})) {
        sum += g_value({n, pair, std::move(prefix)});
    }
    return sum;
}

const std::vector<BigInt>& OracleContext::f_series(LayeredPair pair, int n_max) {
    pair.validate();
    auto& cached = f_cache_[pair];
    if (cached.size() <= static_cast<std::size_t>(n_max)) {
        cached = count_series(n_max, pair.patterns(), limits_);
    }
    return cached;
}

}  // namespace layered_cheb
