#include <doctest.h>

#include <functional>

#include "layered_cheb/checker.hpp"
#include "layered_cheb/serialize.hpp"

using namespace layered_cheb;

namespace {

// Number of tuples in {1..n}^m satisfying `pred`, by plain enumeration.
std::size_t count_tuples(int n, int m, const std::function<bool(const std::vector<int>&)>& pred) {
    std::vector<int> t(static_cast<std::size_t>(m), 1);
    std::size_t total = 0;
    while (true) {
        total += pred(t);
        int pos = m - 1;
        while (pos >= 0 && t[pos] == n) t[pos--] = 1;
        if (pos < 0) return total;
        ++t[pos];
    }
}

bool strictly_decreasing(const std::vector<int>& t, std::size_t len) {
    for (std::size_t i = 1; i < len; ++i) {
        if (t[i] >= t[i - 1]) return false;
    }
    return true;
}

std::size_t lemma22_region(Lemma22Part part, int n_max, int d, int k) {
    std::size_t total = 0;
    for (int n = 1; n <= n_max; ++n) {
        switch (part) {
            case Lemma22Part::Repeat:
                if (n < 2) break;
                for (int m = 2; m <= std::min(3, n); ++m) {
                    total += count_tuples(n, m, [](const std::vector<int>& t) {
                        for (std::size_t i = 0; i < t.size(); ++i)
                            for (std::size_t j = i + 1; j < t.size(); ++j)
                                if (t[i] == t[j]) return true;
                        return false;
                    });
                }
                break;
            case Lemma22Part::NoMiddle:
                if (n < 3) break;
                for (int m = 1; m <= n - 2; ++m) {
                    total += count_tuples(n, m + 1, [&](const std::vector<int>& t) {
                        const int j = t[m];
                        return strictly_decreasing(t, m) && t[0] <= n - 2 && j >= t[m - 1] + 1 &&
                               j <= n - 1;
                    });
                }
                break;
            case Lemma22Part::DropMax:
                if (n < 3) break;
                for (int m = 1; m <= std::min(n, k - d) - 1; ++m) {
                    total += count_tuples(n, m, [&](const std::vector<int>& t) {
                        return strictly_decreasing(t, m) && t[0] <= n - 1;
                    });
                }
                break;
            case Lemma22Part::DropFirst:
                if (n < 3) break;
                for (int m = 2; m <= n; ++m) {
                    total += count_tuples(n, m, [&](const std::vector<int>& t) {
                        return strictly_decreasing(t, m) && t[0] >= n - d + 1;
                    });
                }
                break;
            case Lemma22Part::Vanish:
                if (n < k) break;
                for (int m = k - d; m <= n - d; ++m) {
                    total += count_tuples(n, m, [&](const std::vector<int>& t) {
                        return strictly_decreasing(t, m) && t[0] <= n - d;
                    });
                }
                break;
        }
    }
    return total;
}

const Lemma22Part kParts[] = {Lemma22Part::Repeat, Lemma22Part::NoMiddle, Lemma22Part::DropMax,
                              Lemma22Part::DropFirst, Lemma22Part::Vanish};

}  // namespace

TEST_CASE("report status and merging") {
    VerificationReport r;
    r.statement = "demo";
    CHECK(r.status() == Status::Vacuous);
    r.record(true, "a", "1", "1");
    CHECK(r.status() == Status::Pass);
    r.record(false, "b", "2", "3", 4);
    CHECK(r.status() == Status::Fail);
    CHECK(r.cases == 2);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].first_offending_n == 4);

    VerificationReport empty;
    empty.statement = "empty";
    const auto merged = merge_reports("both", {r, empty});
    CHECK(merged.cases == 2);
    CHECK(merged.status() == Status::Fail);

    const auto text = to_text(r);
    CHECK(text.find("FAIL  demo  cases=2") == 0);
    CHECK(text.find("b: expected 2, got 3 [first offending n=4]") != std::string::npos);
    const auto j = to_json(r);
    CHECK(j["status"] == "fail");
    CHECK(j["failures"][0]["first_offending_n"] == 4);
}

TEST_CASE("symmetry suite") {
    Checker checker;
    const auto r = checker.check_symmetry(8, 5);
    CHECK(r.passed());
    // sum over k = 3..5 of (k-1) * (n_max+1)
    CHECK(r.cases == (2 + 3 + 4) * 9);
    const auto trivial = checker.check_symmetry(0, 3);
    CHECK(trivial.passed());
    CHECK(trivial.cases == 2);
    CHECK(checker.check_symmetry(8, 6).passed());
}

TEST_CASE("prefix-count suite examples") {
    Checker checker;
    CHECK(checker.check_lemma22(8, 1, 3).passed());
    CHECK(checker.check_lemma22(8, 2, 4).passed());
    CHECK(checker.oracle().g_value({4, {1, 3}, {2, 2}}) == 0);
}

TEST_CASE("prefix-count suite covers its hypothesis region exactly") {
    Checker checker;
    for (int k = 3; k <= 5; ++k) {
        for (int d = 1; d <= k / 2; ++d) {
            for (auto part : kParts) {
                const auto r = checker.check_lemma22_part(part, 7, d, k);
                CHECK(r.failures.empty());
                CHECK(r.cases == lemma22_region(part, 7, d, k));
            }
        }
    }
}

TEST_CASE("prefix-count suite normalizes d") {
    Checker checker;
    const auto a = checker.check_lemma22(7, 3, 4);
    const auto b = checker.check_lemma22(7, 1, 4);
    CHECK(a.cases == b.cases);
    CHECK(a.passed());
}

TEST_CASE("recursion suites") {
    Checker checker;
    CHECK(checker.check_recursion(9, 1, 4).passed());
    CHECK(checker.check_recursion(9, 2, 5).passed());

    const auto vacuous = checker.check_theorem23(9, 1, 3);
    CHECK(vacuous.cases == 0);
    CHECK(vacuous.status() == Status::Vacuous);

    for (int k = 3; k <= 6; ++k) {
        for (int d = 1; d <= k / 2; ++d) {
            std::size_t t23 = 0;
            std::size_t e2 = 0;
            for (int n = d + 2; n <= 8; ++n) t23 += std::max(0, std::min(n, k - d) - 2);
            for (int n = d + 1; n <= 8; ++n) e2 += 2 * std::max(0, std::min(n, k - d) - 1);
            CHECK(checker.check_theorem23(8, d, k).cases == t23);
            CHECK(checker.check_eq2(8, d, k).cases == e2);
        }
    }
}

TEST_CASE("eq3 suite") {
    Checker checker;
    CHECK(checker.check_eq3(9, 2, 5).passed());
    const auto only_j1 = checker.check_eq3(9, 1, 3);
    CHECK(only_j1.passed());
    CHECK(only_j1.cases == 9 - 2);
    // j = 1: g_n(n) = f_{n-1}.
    auto& oracle = checker.oracle();
    const auto& f = oracle.f_series({1, 3}, 8);
    for (int n = 3; n <= 8; ++n) CHECK(oracle.g_value({n, {1, 3}, {n}}) == f[n - 1]);
    CHECK(checker.check_eq3(9, 3, 6).cases == (9 - 3 - 1) * 3);
}

TEST_CASE("eq4 suite") {
    Checker checker;
    CHECK(checker.check_eq4(9, 1, 4).passed());
    const auto with_vanishing = checker.check_eq4(9, 2, 4);
    CHECK(with_vanishing.passed());
    CHECK(with_vanishing.cases == (9 - 4 + 1) * 2 + (9 - 4 + 1));
    for (int k = 3; k <= 6; ++k) {
        for (int d = 1; d <= k / 2; ++d) {
            const auto boundary = checker.check_eq4(k, d, k);
            CHECK(boundary.passed());
            CHECK(boundary.cases == static_cast<std::size_t>(k - d + 1));
        }
    }
    CHECK(checker.check_vanishing(3, 1, 4).status() == Status::Vacuous);
}

TEST_CASE("main theorem suite") {
    Checker checker;
    const auto two = checker.check_main(10, Permutation{2, 1, 3});
    CHECK(two.passed());
    CHECK(two.detail.find("p=2, k=3") != std::string::npos);

    const auto one = checker.check_main(10, Permutation{3, 2, 1});
    CHECK(one.passed());
    CHECK(one.cases == 6 + 1);  // zeros at n = 5..10 plus positivity at n = 4

    const auto many = checker.check_main(10, Permutation{2, 1, 3, 4});
    CHECK(many.passed());
    CHECK(many.detail.find("p>=3") != std::string::npos);

    CHECK(checker.check_main(9, Permutation{1, 2, 3}).passed());
    CHECK_THROWS_AS(checker.check_main(5, Permutation{2, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(checker.check_main(5, Permutation{1}), std::invalid_argument);
}

TEST_CASE("triple cross-check suite") {
    Checker checker;
    CHECK(checker.check_theorem11_crosscheck(9, 3).passed());
    CHECK(checker.check_theorem11_crosscheck(9, 4).passed());
    const auto trivial = checker.check_theorem11_crosscheck(0, 5);
    CHECK(trivial.passed());
    CHECK(trivial.cases == 3);
    CHECK_THROWS_AS(checker.check_theorem11_crosscheck(5, 2), std::invalid_argument);
}

TEST_CASE("identity suites") {
    CHECK(check_chebyshev_recurrence(20).passed());
    CHECK(check_chebyshev_trig(10, {0.3, 0.7, 1.1}, 1e-9).passed());
    const auto cat = check_catalan_identity(12);
    CHECK(cat.passed());
    CHECK(cat.cases == 12 * 13 / 2);
    CHECK(check_initial_segment(10).passed());
    CHECK(check_series_recurrence(10, 25).passed());
}

TEST_CASE("reports are deterministic") {
    Checker a;
    Checker b;
    CHECK(a.check_lemma22(7, 2, 5) == b.check_lemma22(7, 2, 5));
    CHECK(to_json(a.check_eq4(8, 1, 5)).dump() == to_json(b.check_eq4(8, 1, 5)).dump());
}

TEST_CASE("mismatching series produce failure witnesses") {
    VerificationReport manual;
    const auto wrong = count_series(6, layered_pair(1, 3));
    const auto right = count_series(6, layered_pair(2, 4));
    for (int n = 0; n <= 6; ++n) {
        manual.record(wrong[n] == right[n], "n=" + std::to_string(n), right[n].str(), wrong[n].str());
    }
    CHECK(manual.status() == Status::Fail);
    CHECK(manual.failures.size() == 4);
    CHECK(manual.failures.front().parameters == "n=3");
    CHECK(manual.failures.front().expected == "5");
    CHECK(manual.failures.front().actual == "4");
}
