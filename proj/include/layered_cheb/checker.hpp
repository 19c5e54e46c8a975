#pragma once

/**
 * @file checker.hpp
 * @brief Exhaustive verification suites: every closed form or recursion is
 *        compared with the brute-force oracle over a finite parameter range.
 *
 * Each suite returns a VerificationReport. A suite with no in-range instance
 * reports Status::Vacuous rather than passing silently.
 *
 * The recursion suites (lemma2.2, theorem2.3, eq2, eq3, eq4, vanishing) assume
 * k-d >= d and replace d by min(d, k-d) before doing anything else; the
 * symmetry suite compares the raw oracle counts for d and k-d and so certifies
 * that replacement independently.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "layered_cheb/oracle.hpp"
#include "layered_cheb/permutation.hpp"

namespace layered_cheb {

enum class Status { Pass, Fail, Vacuous };

std::string to_string(Status status);

struct ParameterRange {
    std::string name;
    long lo = 0;
    long hi = 0;

    bool operator==(const ParameterRange&) const = default;
};

struct Failure {
    std::string parameters;
    std::string expected;
    std::string actual;
    /// Set for series mismatches: the first n where the two sides differ.
    std::optional<int> first_offending_n;

    bool operator==(const Failure&) const = default;
};

struct VerificationReport {
    std::string statement;
    std::string detail;
    std::vector<ParameterRange> ranges;
    std::size_t cases = 0;
    std::vector<Failure> failures;

    Status status() const;
    bool passed() const { return status() == Status::Pass; }

    /// Counts one case and records a failure when `ok` is false.
    void record(bool ok, std::string parameters, std::string expected, std::string actual,
                std::optional<int> first_offending_n = std::nullopt);

    bool operator==(const VerificationReport&) const = default;
};

/// Concatenates the cases and failures of `parts` under one statement id;
/// ranges sharing a name are widened to their hull.
VerificationReport merge_reports(std::string statement, const std::vector<VerificationReport>& parts);

enum class Lemma22Part { Repeat, NoMiddle, DropMax, DropFirst, Vanish };

/// "i" .. "v".
std::string to_string(Lemma22Part part);

/**
 * Runs suites against one OracleContext so overlapping prefix queries are
 * answered from its cache. Not thread-safe.
 */
class Checker {
public:
    explicit Checker(OracleLimits limits = {}) : oracle_(limits) {}

    /// f^{d,k}_n = f^{k-d,k}_n for 3 <= k <= k_max, 1 <= d <= k-1, 0 <= n <= n_max.
    VerificationReport check_symmetry(int n_max, int k_max);

    /// One part of the prefix-count lemma, every hypothesis instance with n <= n_max.
    /// Part (i) is swept over prefixes of length 2 and 3 (at most n) with a repeated entry.
    VerificationReport check_lemma22_part(Lemma22Part part, int n_max, int d, int k);
    /// All five parts merged.
    VerificationReport check_lemma22(int n_max, int d, int k);

    /// A(n,m) = A(n-1,m-1) + A(n,m+1) for n >= d+2, 2 <= m <= min(n,k-d)-1.
    VerificationReport check_theorem23(int n_max, int d, int k);
    /// A(n,m) = A(n,m+1) + B(n-1,m) and B(n,m+1) = A(n,m) for n >= d+1, 1 <= m <= min(n,k-d)-1.
    VerificationReport check_eq2(int n_max, int d, int k);
    /// check_theorem23 and check_eq2 merged.
    VerificationReport check_recursion(int n_max, int d, int k);

    /// g_n(n+1-j) = sum_{i<j} (-1)^i binom(j-1-i, i) f_{n-1-i} for n >= d+2, 1 <= j <= d.
    VerificationReport check_eq3(int n_max, int d, int k);

    /// A(n,m) = sum_{i<=m+d} (-1)^i binom(m+d-i, i) f_{n-i} for n >= k, 1 <= m <= k-d.
    VerificationReport check_eq4_identity(int n_max, int d, int k);
    /// A(n,k-d) = 0 for n >= k.
    VerificationReport check_vanishing(int n_max, int d, int k);
    /// check_eq4_identity and check_vanishing merged.
    VerificationReport check_eq4(int n_max, int d, int k);

    /// Oracle counts for {(1,2,3), tau} against the branch predicted by the
    /// number of layers of tau. Rejects a non-layered tau or one of length < 2.
    VerificationReport check_main(int n_max, const Permutation& tau);

    /// The pairs {123, w(k-1,1)}, {213, 12..k} and {213, k12..(k-1)} all
    /// expand to R_k up to n_max.
    VerificationReport check_theorem11_crosscheck(int n_max, int k);

    OracleContext& oracle() noexcept { return oracle_; }

private:
    OracleContext oracle_;
};

/// cheb_poly(k) = cheb_poly(k-1) - x cheb_poly(k-2) for 2 <= k <= k_max, plus
/// degree floor(k/2) and constant term 1 for 0 <= k <= k_max.
VerificationReport check_chebyshev_recurrence(int k_max);

/// Floating-point comparison of cheb_poly with sin((k+1)theta)/sin(theta).
VerificationReport check_chebyshev_trig(int k_max, const std::vector<double>& thetas,
                                        double rel_tolerance);

/// The Catalan binomial identity for 1 <= k <= k_max, 0 <= l <= k-1.
VerificationReport check_catalan_identity(int k_max);

/// The first k coefficients of R_k are c_0..c_{k-1}, for 2 <= k <= k_max.
VerificationReport check_initial_segment(int k_max);

/// The coefficients of R_k satisfy sum_{i<=k} (-1)^i binom(k-i,i) f_{n-i} = 0
/// for k <= n <= n_max, 2 <= k <= k_max.
VerificationReport check_series_recurrence(int k_max, int n_max);

}  // namespace layered_cheb
