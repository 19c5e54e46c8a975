#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force ground truth for avoidance counts.
 *
 * Everything here is computed by pruned backtracking over permutations; no
 * closed form is consulted. The pruning rests on containment being monotone:
 * once a prefix (read as a sequence of distinct integers) contains a
 * forbidden pattern, so does every completion of it.
 *
 * The prefix-constrained quantities are parameterised by the pattern pair
 * {(1,2,3), w(k-d,d)}; the oracle never swaps d for k-d on its own.
 */

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "layered_cheb/integer.hpp"
#include "layered_cheb/permutation.hpp"

namespace layered_cheb {

/// Raised when a request would exceed the configured length ceiling.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMaxLength = 12;

struct OracleLimits {
    int max_length = kDefaultMaxLength;
};

/// |S_n(T)| by position-by-position placement of values.
BigInt count_avoiders(int n, const PatternSet& patterns, OracleLimits limits = {});

/// (|S_0(T)|, ..., |S_{n_max}(T)|) from a single generating tree: every avoider
/// of length n+1 arises once from its standardized length-n prefix.
std::vector<BigInt> count_series(int n_max, const PatternSet& patterns, OracleLimits limits = {});

/// c_n from the recurrence c_{n+1} = c_n * 2(2n+1)/(n+2).
BigInt catalan(int n);

/// Parameters (d, k) of the pair {(1,2,3), w(k-d,d)}.
struct LayeredPair {
    int d = 1;
    int k = 3;

    /// Throws std::invalid_argument unless k >= 3 and 1 <= d <= k-1.
    void validate() const;
    /// The same pair with d replaced by min(d, k-d).
    LayeredPair normalized() const;
    PatternSet patterns() const { return layered_pair(d, k); }

    auto operator<=>(const LayeredPair&) const = default;
};

/// Addresses g_n(i_1,...,i_m): avoiders of length n starting with the prefix.
struct PrefixQuery {
    int n = 0;
    LayeredPair pair;
    std::vector<int> prefix;
};

enum class IndexSetKind { I, J, K };

/// One of the index sets of decreasing prefixes. With anchor i_0 = n-d+1 for I
/// and K, and i_0 = n-d+2 for J, a tuple (i_1,...,i_m) belongs to I or J when
/// m-j <= i_{j+1} <= i_j - 1 for j = 0..m-1. K keeps the first m-1 entries in
/// I(n,m-1) and lets the last one range over 1..i_{m-1}-1.
struct IndexSetSpec {
    IndexSetKind kind = IndexSetKind::I;
    int n = 0;
    int m = 1;
    int d = 1;
    int k = 3;
};

/// Tuples of the requested set in lexicographic order. Empty when the bounds
/// are infeasible or m > min(n,k)-d; throws only on m < 1, d < 1 or d >= k.
std::vector<std::vector<int>> enumerate_index_set(const IndexSetSpec& spec);

/**
 * Memoising evaluator for g_n, A(n,m) and B(n,m).
 *
 * Caches are keyed by (n, d, k, prefix) and live as long as the context.
 * A context is not thread-safe; give each worker its own.
 */
class OracleContext {
public:
    explicit OracleContext(OracleLimits limits = {}) : limits_(limits) {}

    /// g_n(i_1,...,i_m). Repeated prefix entries give 0; entries outside 1..n
    /// or an empty prefix throw std::invalid_argument.
    BigInt g_value(const PrefixQuery& query);

    /// Sum of g_n over I(n,m). Defined for n >= d+1 and 1 <= m <= k-d; the
    /// sum is empty (hence 0) once m exceeds n-d. Other arguments throw
    /// std::out_of_range.
    BigInt a_value(int n, int m, LayeredPair pair);

    /// Sum of g_n over J(n,m). Defined for n >= d and 1 <= m <= k-d.
    BigInt b_value(int n, int m, LayeredPair pair);

    /// Cached count_series of the pair, extended on demand.
    const std::vector<BigInt>& f_series(LayeredPair pair, int n_max);

    OracleLimits limits() const noexcept { return limits_; }
    std::size_t cached_prefix_queries() const noexcept { return g_cache_.size(); }

private:
    OracleLimits limits_;
    std::map<std::vector<int>, BigInt> g_cache_;
    std::map<LayeredPair, std::vector<BigInt>> f_cache_;
};

/// Uncached g_n(i_1,...,i_m) for an arbitrary pattern set.
BigInt count_with_prefix(int n, std::span<const int> prefix, const PatternSet& patterns,
                         OracleLimits limits = {});

}  // namespace layered_cheb
