// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "layered_cheb/checker.hpp"
#include "layered_cheb/oracle.hpp"
#include "layered_cheb/series.hpp"

using namespace layered_cheb;

namespace {

int failures = 0;

void report(const std::string& id, bool ok, const std::string& detail) {
    std::printf("%s  %-28s %s\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

// Runs `body`; a thrown exception counts as a failure with its message.
void criterion(const std::string& id, const std::function<std::pair<bool, std::string>()>& body) {
    try {
        const auto [ok, detail] = body();
        report(id, ok, detail);
    } catch (const std::exception& e) {
        report(id, false, std::string("exception: ") + e.what());
    }
}

}  // namespace

int main() {
    criterion("two-layer-series", [] {
        const auto start = std::chrono::steady_clock::now();
        int pairs = 0;
        bool ok = true;
        for (int k = 3; k <= 6; ++k) {
            const auto formula = expand(r_k_gf(k), 11);
            for (int d = 1; d <= k - 1; ++d) {
                ok &= count_series(11, layered_pair(d, k)) == formula;
                ++pairs;
            }
        }
        const double elapsed = seconds_since(start);
        ok &= elapsed < 60.0;
        return std::pair{ok, std::to_string(pairs) + " (d,k) pairs, n<=11, " + secs(elapsed)};
    });

    criterion("two-layer-witnesses", [] {
        const IntSeries fib{1, 1, 2, 5, 13, 34, 89};
        bool ok = expand(r_k_gf(4), 6) == fib;
        const auto f = count_series(11, PatternSet{Permutation{1, 2, 3}, Permutation{2, 1, 4, 3}});
        ok &= std::equal(fib.begin(), fib.end(), f.begin());
        for (int n = 2; n <= 11; ++n) ok &= f[n] == 3 * f[n - 1] - f[n - 2];
        const auto k3 = count_series(11, layered_pair(1, 3));
        for (int n = 1; n <= 11; ++n) ok &= k3[n] == BigInt(1) << (n - 1);
        return std::pair{ok, std::string("2143: 1,1,2,5,13,34,89 and f_n = 3f_(n-1) - f_(n-2); 213: 2^(n-1)")};
    });

    criterion("triple-crosscheck", [] {
        Checker checker;
        bool ok = true;
        std::size_t cases = 0;
        for (int k = 3; k <= 5; ++k) {
            const auto r = checker.check_theorem11_crosscheck(9, k);
            ok &= r.passed();
            cases += r.cases;
        }
        return std::pair{ok, "k=3..5, n<=9, cases=" + std::to_string(cases)};
    });

    criterion("single-layer-vanishes", [] {
        bool ok = true;
        for (int k = 3; k <= 5; ++k) {
            std::vector<int> dec(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) dec[i] = k - i;
            const int top = std::min(2 * k + 1, 11);
            const auto f = count_series(top, PatternSet{Permutation{1, 2, 3}, Permutation(dec)});
            ok &= f[2 * k - 2] > 0;
            for (int n = 2 * k - 1; n <= top; ++n) ok &= f[n] == 0;
        }
        return std::pair{ok, std::string("k=3..5: zero for 2k-1<=n<=min(2k+1,11), positive at 2k-2")};
    });

    criterion("many-layers-catalan", [] {
        bool ok = true;
        const std::vector<Permutation> taus{Permutation{1, 2, 3, 4}, Permutation{2, 1, 3, 4},
                                            Permutation{2, 1, 4, 3, 5}};
        for (const auto& tau : taus) {
            const auto f = count_series(10, PatternSet{Permutation{1, 2, 3}, tau});
            for (int n = 0; n <= 10; ++n) ok &= f[n] == catalan(n);
        }
        return std::pair{ok, std::string("tau in {1234, 2134, 21435}, n<=10")};
    });

    criterion("recursion-tower", [] {
        const auto start = std::chrono::steady_clock::now();
        Checker checker;
        bool ok = true;
        std::size_t cases = 0;
        for (int k = 3; k <= 6; ++k) {
            for (int d = 1; d <= k / 2; ++d) {
                for (const auto& r : {checker.check_lemma22(9, d, k), checker.check_recursion(9, d, k),
                                      checker.check_eq3(9, d, k), checker.check_eq4(9, d, k)}) {
                    ok &= r.failures.empty();
                    cases += r.cases;
                }
            }
        }
        const double elapsed = seconds_since(start);
        ok &= cases > 0 && elapsed < 120.0;
        return std::pair{ok, "3<=k<=6, d<=k/2, n<=9, cases=" + std::to_string(cases) + ", " + secs(elapsed)};
    });

    criterion("symmetry", [] {
        Checker checker;
        const auto r = checker.check_symmetry(8, 6);
        return std::pair{r.passed(), "n<=8, k<=6, cases=" + std::to_string(r.cases)};
    });

    criterion("chebyshev-recurrence", [] {
        const auto r = check_chebyshev_recurrence(20);
        return std::pair{r.passed(), "k<=20, cases=" + std::to_string(r.cases)};
    });

    criterion("catalan-identity", [] {
        const auto r = check_catalan_identity(12);
        return std::pair{r.passed(), "k<=12, cases=" + std::to_string(r.cases)};
    });

    criterion("chebyshev-trig", [] {
        double worst = 0.0;
        for (int k = 0; k <= 10; ++k) {
            for (double theta : {0.3, 0.7, 1.1}) {
                const double exact = std::sin((k + 1) * theta) / std::sin(theta);
                worst = std::max(worst, std::abs(chebyshev_u_via_poly(k, theta) - exact) / std::abs(exact));
            }
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "k<=10, worst relative error %.1e", worst);
        return std::pair{worst <= 1e-9, std::string(buf)};
    });

    criterion("initial-segment", [] {
        bool ok = true;
        for (int k = 2; k <= 10; ++k) {
            const auto f = expand(r_k_gf(k), k - 1);
            for (int n = 0; n < k; ++n) ok &= f[n] == catalan(n);
        }
        return std::pair{ok, std::string("first k coefficients of R_k are Catalan, 2<=k<=10")};
    });

    std::printf("%s: %d failure(s)\n", failures ? "FAILED" : "OK", failures);
    return failures ? 1 : 0;
}
