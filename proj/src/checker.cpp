#include "layered_cheb/checker.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "layered_cheb/series.hpp"

namespace layered_cheb {

namespace {

std::string tuple_text(std::span<const int> values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out + ")";
}

std::string params(const LayeredPair& pair, int n) {
    return "d=" + std::to_string(pair.d) + ", k=" + std::to_string(pair.k) +
           ", n=" + std::to_string(n);
}

// Strictly decreasing tuples i_1 > ... > i_m >= 1 with lo_first <= i_1 <= top.
void for_each_decreasing(int m, int top, int lo_first,
                         const std::function<void(const std::vector<int>&)>& visit) {
    if (m < 1) return;
    std::vector<int> tuple(static_cast<std::size_t>(m));
    std::function<void(int, int)> fill = [&](int j, int upper) {
        if (j == m) {
            visit(tuple);
            return;
        }
        const int lowest = std::max(m - j, j == 0 ? lo_first : 1);
        for (int v = lowest; v <= upper; ++v) {
            tuple[static_cast<std::size_t>(j)] = v;
            fill(j + 1, v - 1);
        }
    };
    fill(0, top);
}

BigInt signed_binomial_sum(int top, const std::vector<BigInt>& f, int base) {
    // sum_{i=0}^{top} (-1)^i binom(top-i, i) f_{base-i}
    BigInt sum = 0;
    for (int i = 0; i <= top; ++i) {
        BigInt term = binomial(top - i, i) * f[static_cast<std::size_t>(base - i)];
        sum += i % 2 ? BigInt(-term) : term;
    }
    return sum;
}

void compare_series(VerificationReport& report, const std::string& label,
                    const std::vector<BigInt>& expected, const std::vector<BigInt>& actual) {
    std::optional<int> first;
    for (std::size_t n = 0; n < expected.size(); ++n) {
        if (expected[n] != actual[n] && !first) first = static_cast<int>(n);
    }
    for (std::size_t n = 0; n < expected.size(); ++n) {
        report.record(expected[n] == actual[n], label + ", n=" + std::to_string(n),
                      expected[n].str(), actual[n].str(), first);
    }
}

PatternSet with_increasing(const Permutation& tau) {
    const Permutation increasing{1, 2, 3};
    if (tau == increasing) return PatternSet{increasing};
    return PatternSet{increasing, tau};
}

void require_n_max(int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
}

}  // namespace

std::string to_string(Status status) {
    switch (status) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Vacuous: return "vacuous";
    }
    return "?";
}

std::string to_string(Lemma22Part part) {
    switch (part) {
        case Lemma22Part::Repeat: return "i";
        case Lemma22Part::NoMiddle: return "ii";
        case Lemma22Part::DropMax: return "iii";
        case Lemma22Part::DropFirst: return "iv";
        case Lemma22Part::Vanish: return "v";
    }
    return "?";
}

Status VerificationReport::status() const {
    if (!failures.empty()) return Status::Fail;
    return cases == 0 ? Status::Vacuous : Status::Pass;
}

void VerificationReport::record(bool ok, std::string parameters, std::string expected,
                                std::string actual, std::optional<int> first_offending_n) {
    ++cases;
    if (!ok) {
        failures.push_back({std::move(parameters), std::move(expected), std::move(actual),
                            first_offending_n});
    }
}

VerificationReport merge_reports(std::string statement, const std::vector<VerificationReport>& parts) {
    VerificationReport out;
    out.statement = std::move(statement);
    for (const auto& part : parts) {
        if (!part.detail.empty()) {
            if (!out.detail.empty()) out.detail += "; ";
            out.detail += part.statement + ": " + part.detail;
        }
        // One span per parameter name; empty spans contribute nothing.
        for (const auto& r : part.ranges) {
            if (r.lo > r.hi) continue;
            auto it = std::find_if(out.ranges.begin(), out.ranges.end(),
                                   [&](const ParameterRange& x) { return x.name == r.name; });
            if (it == out.ranges.end()) {
                out.ranges.push_back(r);
            } else {
                it->lo = std::min(it->lo, r.lo);
                it->hi = std::max(it->hi, r.hi);
            }
        }
        out.cases += part.cases;
        out.failures.insert(out.failures.end(), part.failures.begin(), part.failures.end());
    }
    return out;
}

VerificationReport Checker::check_symmetry(int n_max, int k_max) {
    require_n_max(n_max);
    VerificationReport report;
    report.statement = "lemma2.1";
    report.ranges = {{"k", 3, k_max}, {"d", 1, k_max - 1}, {"n", 0, n_max}};
    for (int k = 3; k <= k_max; ++k) {
        for (int d = 1; d <= k - 1; ++d) {
            const auto& lhs = oracle_.f_series({d, k}, n_max);
            const auto& rhs = oracle_.f_series({k - d, k}, n_max);
            for (int n = 0; n <= n_max; ++n) {
                const auto i = static_cast<std::size_t>(n);
                report.record(lhs[i] == rhs[i], params({d, k}, n), lhs[i].str(), rhs[i].str());
            }
        }
    }
    return report;
}

VerificationReport Checker::check_lemma22_part(Lemma22Part part, int n_max, int d, int k) {
    require_n_max(n_max);
    const LayeredPair pair = LayeredPair{d, k}.normalized();
    pair.validate();
    const int dd = pair.d;
    VerificationReport report;
    report.statement = "lemma2.2(" + to_string(part) + ")";
    report.detail = "d normalized to " + std::to_string(dd);

    auto g = [&](int n, std::vector<int> prefix) {
        return oracle_.g_value({n, pair, std::move(prefix)});
    };
    auto expect_zero = [&](int n, const std::vector<int>& prefix) {
        const BigInt v = g(n, prefix);
        report.record(v == 0, params(pair, n) + ", prefix=" + tuple_text(prefix), "0", v.str());
    };

    switch (part) {
        case Lemma22Part::Repeat:
            report.ranges = {{"n", 2, n_max}, {"m", 2, 3}};
            for (int n = 2; n <= n_max; ++n) {
                for (int m = 2; m <= std::min(3, n); ++m) {
                    std::vector<int> prefix(static_cast<std::size_t>(m), 1);
                    while (true) {
                        auto sorted = prefix;
                        std::sort(sorted.begin(), sorted.end());
                        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                            expect_zero(n, prefix);
                        }
                        int pos = m - 1;
                        while (pos >= 0 && prefix[static_cast<std::size_t>(pos)] == n) {
                            prefix[static_cast<std::size_t>(pos)] = 1;
                            --pos;
                        }
                        if (pos < 0) break;
                        ++prefix[static_cast<std::size_t>(pos)];
                    }
                }
            }
            break;
        case Lemma22Part::NoMiddle:
            report.ranges = {{"n", 3, n_max}, {"m", 1, n_max - 2}};
            for (int n = 3; n <= n_max; ++n) {
                for (int m = 1; m <= n - 2; ++m) {
                    for_each_decreasing(m, n - 2, 1, [&](const std::vector<int>& t) {
                        for (int j = t.back() + 1; j <= n - 1; ++j) {
                            auto prefix = t;
                            prefix.push_back(j);
                            expect_zero(n, prefix);
                        }
                    });
                }
            }
            break;
        case Lemma22Part::DropMax:
            report.ranges = {{"n", 3, n_max}, {"m", 1, k - dd - 1}};
            for (int n = 3; n <= n_max; ++n) {
                for (int m = 1; m <= std::min(n, k - dd) - 1; ++m) {
                    for_each_decreasing(m, n - 1, 1, [&](const std::vector<int>& t) {
                        auto extended = t;
                        extended.push_back(n);
                        const BigInt lhs = g(n, extended);
                        const BigInt rhs = g(n - 1, t);
                        report.record(lhs == rhs, params(pair, n) + ", prefix=" + tuple_text(extended),
                                      rhs.str(), lhs.str());
                    });
                }
            }
            break;
        case Lemma22Part::DropFirst:
            report.ranges = {{"n", 3, n_max}, {"m", 2, n_max}};
            for (int n = 3; n <= n_max; ++n) {
                for (int m = 2; m <= n; ++m) {
                    for_each_decreasing(m, n, n - dd + 1, [&](const std::vector<int>& t) {
                        const BigInt lhs = g(n, t);
                        const BigInt rhs = g(n - 1, std::vector<int>(t.begin() + 1, t.end()));
                        report.record(lhs == rhs, params(pair, n) + ", prefix=" + tuple_text(t),
                                      rhs.str(), lhs.str());
                    });
                }
            }
            break;
        case Lemma22Part::Vanish:
            report.ranges = {{"n", k, n_max}, {"m", k - dd, n_max - dd}};
            for (int n = k; n <= n_max; ++n) {
                for (int m = k - dd; m <= n - dd; ++m) {
                    for_each_decreasing(m, n - dd, 1,
                                        [&](const std::vector<int>& t) { expect_zero(n, t); });
                }
            }
            break;
    }
    return report;
}

VerificationReport Checker::check_lemma22(int n_max, int d, int k) {
    std::vector<VerificationReport> parts;
    for (auto part : {Lemma22Part::Repeat, Lemma22Part::NoMiddle, Lemma22Part::DropMax,
                      Lemma22Part::DropFirst, Lemma22Part::Vanish}) {
        parts.push_back(check_lemma22_part(part, n_max, d, k));
    }
    return merge_reports("lemma2.2", parts);
}

VerificationReport Checker::check_theorem23(int n_max, int d, int k) {
    require_n_max(n_max);
    const LayeredPair pair = LayeredPair{d, k}.normalized();
    pair.validate();
    VerificationReport report;
    report.statement = "theorem2.3";
    report.detail = "d normalized to " + std::to_string(pair.d);
    report.ranges = {{"n", pair.d + 2, n_max}, {"m", 2, k - pair.d - 1}};
    for (int n = pair.d + 2; n <= n_max; ++n) {
        for (int m = 2; m <= std::min(n, k - pair.d) - 1; ++m) {
            const BigInt lhs = oracle_.a_value(n, m, pair);
            const BigInt rhs = oracle_.a_value(n - 1, m - 1, pair) + oracle_.a_value(n, m + 1, pair);
            report.record(lhs == rhs, params(pair, n) + ", m=" + std::to_string(m), rhs.str(),
                          lhs.str());
        }
    }
    return report;
}

VerificationReport Checker::check_eq2(int n_max, int d, int k) {
    require_n_max(n_max);
    const LayeredPair pair = LayeredPair{d, k}.normalized();
    pair.validate();
    VerificationReport report;
    report.statement = "eq2";
    report.detail = "d normalized to " + std::to_string(pair.d);
    report.ranges = {{"n", pair.d + 1, n_max}, {"m", 1, k - pair.d - 1}};
    for (int n = pair.d + 1; n <= n_max; ++n) {
        for (int m = 1; m <= std::min(n, k - pair.d) - 1; ++m) {
            const std::string where = params(pair, n) + ", m=" + std::to_string(m);
            const BigInt a = oracle_.a_value(n, m, pair);
            const BigInt rhs = oracle_.a_value(n, m + 1, pair) + oracle_.b_value(n - 1, m, pair);
            report.record(a == rhs, "A(n,m)=A(n,m+1)+B(n-1,m), " + where, rhs.str(), a.str());
            const BigInt b = oracle_.b_value(n, m + 1, pair);
            report.record(b == a, "B(n,m+1)=A(n,m), " + where, a.str(), b.str());
        }
    }
    return report;
}

VerificationReport Checker::check_recursion(int n_max, int d, int k) {
    return merge_reports("recursion", {check_theorem23(n_max, d, k), check_eq2(n_max, d, k)});
}

VerificationReport Checker::check_eq3(int n_max, int d, int k) {
    require_n_max(n_max);
    const LayeredPair pair = LayeredPair{d, k}.normalized();
    pair.validate();
    VerificationReport report;
    report.statement = "eq3";
    report.detail = "d normalized to " + std::to_string(pair.d);
    report.ranges = {{"n", pair.d + 2, n_max}, {"j", 1, pair.d}};
    if (n_max < pair.d + 2) return report;
    const auto& f = oracle_.f_series(pair, n_max);
    for (int n = pair.d + 2; n <= n_max; ++n) {
        for (int j = 1; j <= pair.d; ++j) {
            const BigInt lhs = oracle_.g_value({n, pair, {n + 1 - j}});
            const BigInt rhs = signed_binomial_sum(j - 1, f, n - 1);
            report.record(lhs == rhs, params(pair, n) + ", j=" + std::to_string(j), rhs.str(),
                          lhs.str());
        }
    }
    return report;
}

VerificationReport Checker::check_eq4_identity(int n_max, int d, int k) {
    require_n_max(n_max);
    const LayeredPair pair = LayeredPair{d, k}.normalized();
    pair.validate();
    VerificationReport report;
    report.statement = "eq4";
    report.detail = "d normalized to " + std::to_string(pair.d);
    report.ranges = {{"n", k, n_max}, {"m", 1, k - pair.d}};
    if (n_max < k) return report;
    const auto& f = oracle_.f_series(pair, n_max);
    for (int n = k; n <= n_max; ++n) {
        for (int m = 1; m <= k - pair.d; ++m) {
            const BigInt lhs = oracle_.a_value(n, m, pair);
            const BigInt rhs = signed_binomial_sum(m + pair.d, f, n);
            report.record(lhs == rhs, params(pair, n) + ", m=" + std::to_string(m), rhs.str(),
                          lhs.str());
        }
    }
    return report;
}

VerificationReport Checker::check_vanishing(int n_max, int d, int k) {
    require_n_max(n_max);
    const LayeredPair pair = LayeredPair{d, k}.normalized();
    pair.validate();
    VerificationReport report;
    report.statement = "vanishing";
    report.detail = "d normalized to " + std::to_string(pair.d);
    report.ranges = {{"n", k, n_max}};
    for (int n = k; n <= n_max; ++n) {
        const BigInt a = oracle_.a_value(n, k - pair.d, pair);
        report.record(a == 0, params(pair, n) + ", m=" + std::to_string(k - pair.d), "0", a.str());
    }
    return report;
}

VerificationReport Checker::check_eq4(int n_max, int d, int k) {
    return merge_reports("eq4+vanishing", {check_eq4_identity(n_max, d, k), check_vanishing(n_max, d, k)});
}

VerificationReport Checker::check_main(int n_max, const Permutation& tau) {
    require_n_max(n_max);
    if (tau.size() < 2) throw std::invalid_argument("tau must have length >= 2");
    const auto shape = layer_decomposition(tau);
    if (!shape) throw std::invalid_argument("tau = " + tau.to_string() + " is not layered");
    const int k = shape->length();
    const int p = shape->layers();

    VerificationReport report;
    report.statement = "theorem1.2";
    report.ranges = {{"n", 0, n_max}};
    const auto oracle = count_series(n_max, with_increasing(tau), oracle_.limits());
    const std::string label = "tau=" + tau.to_string();
    if (p == 1) {
        report.detail = "branch p=1, k=" + std::to_string(k) + ", tau=" + tau.to_string();
        const int degree = 2 * k - 2;
        for (int n = degree + 1; n <= n_max; ++n) {
            const auto& v = oracle[static_cast<std::size_t>(n)];
            report.record(v == 0, label + ", n=" + std::to_string(n), "0", v.str(), n);
        }
        if (degree <= n_max) {
            const auto& v = oracle[static_cast<std::size_t>(degree)];
            report.record(v > 0, label + ", n=" + std::to_string(degree), ">0", v.str(), degree);
        }
    } else if (p == 2) {
        report.detail = "branch p=2, k=" + std::to_string(k) + ", tau=" + tau.to_string();
        compare_series(report, label, expand(r_k_gf(k), n_max), oracle);
    } else {
        report.detail = "branch p>=3, k=" + std::to_string(k) + ", tau=" + tau.to_string();
        std::vector<BigInt> c;
        for (int n = 0; n <= n_max; ++n) c.push_back(catalan(n));
        compare_series(report, label, c, oracle);
    }
    return report;
}

VerificationReport Checker::check_theorem11_crosscheck(int n_max, int k) {
    require_n_max(n_max);
    if (k < 3) throw std::invalid_argument("the triple cross-check needs k >= 3");
    VerificationReport report;
    report.statement = "theorem1.1";
    report.detail = "k=" + std::to_string(k);
    report.ranges = {{"n", 0, n_max}};

    const Permutation p213{2, 1, 3};
    std::vector<int> rotated{k};
    for (int v = 1; v < k; ++v) rotated.push_back(v);
    const std::vector<std::pair<std::string, PatternSet>> sets{
        {"T1", PatternSet{Permutation{1, 2, 3}, layered(LayeredShape{k - 1, 1})}},
        {"T2", PatternSet{p213, Permutation::identity(k)}},
        {"T3", PatternSet{p213, Permutation(rotated)}},
    };
    const auto expected = expand(r_k_gf(k), n_max);
    for (const auto& [name, patterns] : sets) {
        compare_series(report, name + "={" + patterns.to_string() + "}", expected,
                       count_series(n_max, patterns, oracle_.limits()));
    }
    return report;
}

VerificationReport check_chebyshev_recurrence(int k_max) {
    VerificationReport report;
    report.statement = "chebyshev-recurrence";
    report.ranges = {{"k", 0, k_max}};
    const IntPolynomial x = IntPolynomial::monomial(1);
    for (int k = 0; k <= k_max; ++k) {
        const auto p = cheb_poly(k);
        const std::string where = "k=" + std::to_string(k);
        report.record(p.degree() == k / 2, "degree, " + where, std::to_string(k / 2),
                      std::to_string(p.degree()));
        report.record(p[0] == 1, "constant term, " + where, "1", p[0].str());
        if (k >= 2) {
            const auto rhs = cheb_poly(k - 1) - x * cheb_poly(k - 2);
            report.record(p == rhs, "recurrence, " + where, rhs.to_string(), p.to_string());
        }
    }
    return report;
}

VerificationReport check_chebyshev_trig(int k_max, const std::vector<double>& thetas,
                                        double rel_tolerance) {
    VerificationReport report;
    report.statement = "chebyshev-trig";
    report.ranges = {{"k", 0, k_max}};
    for (int k = 0; k <= k_max; ++k) {
        for (double theta : thetas) {
            const double exact = std::sin((k + 1) * theta) / std::sin(theta);
            const double via_poly = chebyshev_u_via_poly(k, theta);
            const double rel = std::abs(via_poly - exact) / std::abs(exact);
            std::ostringstream e, a, where;
            e.precision(17);
            a.precision(17);
            e << exact;
            a << via_poly;
            where << "k=" << k << ", theta=" << theta;
            report.record(rel <= rel_tolerance, where.str(), e.str(), a.str());
        }
    }
    return report;
}

VerificationReport check_catalan_identity(int k_max) {
    VerificationReport report;
    report.statement = "catalan-identity";
    report.ranges = {{"k", 1, k_max}, {"l", 0, k_max - 1}};
    for (int k = 1; k <= k_max; ++k) {
        for (int l = 0; l <= k - 1; ++l) {
            report.record(catalan_identity_check(k, l),
                          "k=" + std::to_string(k) + ", l=" + std::to_string(l), "equal", "differ");
        }
    }
    return report;
}

VerificationReport check_initial_segment(int k_max) {
    VerificationReport report;
    report.statement = "initial-segment";
    report.ranges = {{"k", 2, k_max}};
    for (int k = 2; k <= k_max; ++k) {
        const auto f = expand(r_k_gf(k), k - 1);
        std::vector<BigInt> c;
        for (int n = 0; n < k; ++n) c.push_back(catalan(n));
        compare_series(report, "k=" + std::to_string(k), c, f);
    }
    return report;
}

VerificationReport check_series_recurrence(int k_max, int n_max) {
    VerificationReport report;
    report.statement = "series-recurrence";
    report.ranges = {{"k", 2, k_max}, {"n", 2, n_max}};
    for (int k = 2; k <= k_max; ++k) {
        const auto f = expand(r_k_gf(k), n_max);
        for (int n = k; n <= n_max; ++n) {
            const BigInt sum = signed_binomial_sum(k, f, n);
            report.record(sum == 0, "k=" + std::to_string(k) + ", n=" + std::to_string(n), "0",
                          sum.str());
        }
    }
    return report;
}

}  // namespace layered_cheb
