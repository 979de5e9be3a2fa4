#include "ratsq/analysis.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace ratsq;

namespace {

// Witness for tau_s = k, tau_{s+1} = k - 1 by walking the direct counts.
std::optional<Natural> brute_witness(long a, long k, long s_max) {
    for (long s = 1; s <= s_max; ++s)
        if (tau_brute(a, s) == k && tau_brute(a, s + 1) == k - 1) return Natural(s);
    return std::nullopt;
}

bool same_records(const std::vector<SweepRecord>& x, const std::vector<SweepRecord>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto& p = x[i];
        const auto& q = y[i];
        if (p.a != q.a || p.sigma != q.sigma || p.sigma1 != q.sigma1 || p.upper != q.upper ||
            p.on_bound != q.on_bound || p.min_k != q.min_k || p.t_first != q.t_first)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("records") {
    const SweepRecord r = make_record(8);
    CHECK(r.sigma == 6);
    CHECK(r.sigma1 == 6);
    CHECK(r.upper == 6);
    CHECK(r.on_bound);
    CHECK(r.min_k == 1);
    CHECK(r.t_first == 17);

    const SweepRecord q = make_record(19);
    CHECK(q.sigma == 5);
    CHECK(q.sigma1 == 3);
    CHECK_FALSE(q.on_bound);
    CHECK(q.min_k == 2);
    CHECK(q.t_first == 22);
}

TEST_CASE("parallel kernels match the serial reference") {
    for (int jobs : {1, 2, 3, 8}) {
        CHECK(same_records(sweep(1, 700, jobs), sweep_serial(1, 700)));
        CHECK(sigma_table(500, 2500, jobs) == sigma_table_serial(500, 2500));
        const TauGrid g = tau_grid(1, 300, 1, 120, jobs);
        const TauGrid h = tau_grid_serial(1, 300, 1, 120);
        CHECK(g.values == h.values);
        CHECK(g.width() == 120);
        CHECK(g.height() == 300);
    }
    const TauGrid g = tau_grid(8, 20, 2, 7, 2);
    CHECK(g.at(0, 4) == 1);  // tau_6(8)
    CHECK(g.at(0, 0) == 0);  // tau_2(8)
    CHECK(g.at(11, 1) == tau(19, 3));
}

TEST_CASE("sweep argument checks") {
    CHECK_THROWS_AS(sweep(5, 4), std::domain_error);
    CHECK_THROWS_AS(sweep(0, 4), std::domain_error);
    CHECK_THROWS_AS(tau_grid(1, 4, 3, 2), std::domain_error);
}

TEST_CASE("worker exceptions reach the caller") {
    CHECK_THROWS_AS(sigma_table(0, 10, 4), std::domain_error);
}

TEST_CASE("tau profile") {
    const TauProfile p = tau_profile(8, 12);
    CHECK(p.counts.size() == 12);
    CHECK(p.counts[5] == 1);
    CHECK(std::all_of(p.counts.begin(), p.counts.begin() + 5, [](const Natural& t) { return t == 0; }));
    for (long a = 1; a <= 300; ++a) CHECK_NOTHROW(tau_profile(a, 200));
}

TEST_CASE("ratios") {
    CHECK(Ratio::of(6, 8).exact() == "3/4");
    CHECK(Ratio::of(0, 8).exact() == "0/1");
    CHECK(Ratio::of(1, 4).value() == doctest::Approx(0.25));
    CHECK_THROWS_AS(Ratio::of(1, 0), std::domain_error);
}

TEST_CASE("on-bound fraction") {
    const Ratio r = on_bound_fraction(1, 500, 2);
    CHECK(r.exact() == "157/250");
    CHECK(on_bound_fraction(sweep(1, 500)).exact() == r.exact());
    long hits = 0;
    for (long a = 1; a <= 500; ++a) hits += sigma(a) == sigma_lower(a);
    CHECK(Ratio::of(hits, 500).exact() == r.exact());
}

TEST_CASE("near symmetry around n(n+1)") {
    // n = 3: a_min = 12, compare sigma(11), sigma(10), sigma(9) with 13, 14, 15
    long m = 0;
    for (long d = 1; d <= 3; ++d) m += sigma(12 - d) == sigma(12 + d);
    CHECK(symmetry_stats(3, 3).exact() == Ratio::of(m, 3).exact());
    CHECK_THROWS_AS(symmetry_stats(3, 4), std::domain_error);

    const SymmetrySurvey survey = symmetry_survey(2000, false, 2);
    CHECK(survey.rows.size() == 43);
    CHECK(survey.rows.front().n == 2);
    CHECK(survey.rows.back().n == 44);
    Natural matched = 0, total = 0;
    for (const auto& row : survey.rows) {
        CHECK(Ratio::of(row.matches, row.d_max).exact() == symmetry_stats(row.n, row.d_max).exact());
        matched += row.matches;
        total += row.d_max;
    }
    CHECK(survey.aggregate.exact() == Ratio::of(matched, total).exact());
    CHECK(survey.aggregate.value() >= 0.50);
    CHECK(survey.aggregate.value() <= 0.70);

    const SymmetrySurvey full = symmetry_survey(30, true, 1);
    CHECK(full.rows.size() == 4);
    CHECK(full.rows.back().d_max == 29);
}

TEST_CASE("off-bound points and peaks") {
    const auto points = off_bound_points(1, 2000, 2);
    for (const auto& p : points) CHECK(p.sigma > sigma_lower(p.a));
    CHECK(std::is_sorted(points.begin(), points.end(),
                         [](const OffBoundPoint& x, const OffBoundPoint& y) { return x.a < y.a; }));
    std::size_t off = 0;
    for (long a = 1; a <= 2000; ++a) off += sigma(a) != sigma_lower(a);
    CHECK(points.size() == off);

    const long expected[] = {11, 11, 11, 13, 13, 15, 15, 15, 17, 17};
    const auto peaks = offbound_peaks(11, 20);
    REQUIRE(peaks.size() == 10);
    for (std::size_t i = 0; i < peaks.size(); ++i) {
        const Natural n = 11 + i;
        CHECK(peaks[i].sigma_peak == expected[i]);
        CHECK(peaks[i].a_peak == n * n + n - 1);
        CHECK(peaks[i].ties == 1);
        CHECK(peaks[i].at_expected);
    }
}

TEST_CASE("off-bound minima straddle n^2 + n") {
    for (long n = 7; n <= 30; ++n) {
        const auto minima = offbound_minima(n);
        REQUIRE(minima.size() == 2);
        CHECK(minima[0] < n * n + n);
        CHECK(minima[1] > n * n + n);
    }
    CHECK_THROWS_AS(offbound_minima(6), std::domain_error);
}

TEST_CASE("k sets") {
    const auto minimal = k_set(100, KConvention::minimal);
    const auto existential = k_set(100, KConvention::existential);
    CHECK(minimal == existential);
    std::vector<Natural> found;
    for (long k : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 18, 19, 22, 29, 40})
        found.emplace_back(k);
    CHECK(minimal == found);

    // n = 3 from the exact floors and a direct sigma scan
    std::set<Natural> small;
    for (long a = 10; a <= 15; ++a) {
        long s = 1;
        while (tau_brute(a, s) == 0) ++s;
        for (long k = 1; k <= s; ++k) {
            const Integer v = std::max(floor_surd(sigma_l(a).scaled(k)),
                                       floor_surd(sigma_r(a).scaled(k))) + 1;
            if (v == s) {
                small.insert(k);
                break;
            }
        }
    }
    CHECK(k_set(3, KConvention::minimal) == std::vector<Natural>(small.begin(), small.end()));
}

TEST_CASE("conjecture 1 probes") {
    const auto r = conjecture1_probe(12, 1, 100);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.witness == Natural(2));

    const auto refuted = conjecture1_probe(2, 1, 100);
    CHECK(refuted.verdict == Verdict::fail);
    CHECK(refuted.exhaustive);
    CHECK_FALSE(refuted.witness.has_value());

    const auto capped = conjecture1_probe(991, 4, 3);
    CHECK(capped.verdict == Verdict::indeterminate);
    CHECK(capped.searched_to == 3);

    CHECK_THROWS_AS(conjecture1_probe(3, 1, 10), std::domain_error);
    CHECK_THROWS_AS(conjecture1_probe(9, 1, 10), std::domain_error);
    CHECK(std::string(to_string(Verdict::indeterminate)) == "indeterminate");

    for (long a = 2; a <= 120; ++a) {
        if (is_perfect_square(a) || is_perfect_square(a + 1)) continue;
        for (long k = 1; k <= 3; ++k) {
            const auto probe = conjecture1_probe(a, k, 400);
            REQUIRE(probe.witness == brute_witness(a, k, 400));
            // exhaustive failures really have nothing further out
            if (probe.exhaustive) REQUIRE_FALSE(brute_witness(a, k, 1200).has_value());
        }
    }
}

TEST_CASE("upward closure of S(a)") {
    CHECK(upward_closure_check(12, 3) == std::vector<Natural>{2});
    CHECK(upward_closure_check(12, 1).empty());
    for (long n = 2; n <= 40; ++n) {
        CHECK(upward_closure_check(n * n, 300).empty());
        CHECK(upward_closure_check(n * n - 1, 300).empty());
    }
    for (long n = 2; n <= 50; ++n) {
        const long a = n * n + n;
        CHECK(upward_closure_check(a, 3) == std::vector<Natural>{2});
        for (long s = 2; s <= 100; s += 2) {
            const Natural t = Natural(s / 2) * (2 * n + 1);
            const auto ts = t_set(a, s);
            REQUIRE(std::find(ts.begin(), ts.end(), t) != ts.end());
        }
    }
}

TEST_CASE("odd k in S(n^2 + n)") {
    const auto three = odd_k_threshold(3, 200);
    CHECK_FALSE(three.last_n.has_value());
    for (long k : {5, 7, 9}) {
        const auto t = odd_k_threshold(k, 120);
        std::optional<Natural> last;
        for (long n = 2; n <= 120; ++n)
            if (tau_brute(n * n + n, k) > 0) last = n;
        CHECK(t.last_n == last);
    }
    CHECK_THROWS_AS(odd_k_threshold(4, 10), std::domain_error);
    CHECK_THROWS_AS(odd_k_threshold(1, 10), std::domain_error);
}
