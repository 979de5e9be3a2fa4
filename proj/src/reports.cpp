#include "ratsq/reports.hpp"

#include <algorithm>
#include <sstream>

namespace ratsq {

using nlohmann::json;

namespace {

json json_naturals(const std::vector<Natural>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(json_natural(x));
    return out;
}

// n^2 + n - 1, the centre of the off-bound trough structure
Natural trough_pivot(const Natural& n) { return n * n + n - 1; }

}  // namespace

json json_natural(const Natural& x) {
    if (auto v = to_u64(x)) return *v;
    return x.str();
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
    std::ostringstream out;
    out << "a,sigma,sigma1,upper,on_bound,min_k,t_first\n";
    for (const auto& r : records) {
        out << r.a << ',' << r.sigma << ',' << r.sigma1 << ',' << r.upper << ','
            << (r.on_bound ? 1 : 0) << ',' << r.min_k << ',' << r.t_first << '\n';
    }
    return out.str();
}

std::string sweep_json(const std::vector<SweepRecord>& records) {
    json out = json::array();
    for (const auto& r : records) {
        json row = json::object();
        row["a"] = json_natural(r.a);
        row["sigma"] = json_natural(r.sigma);
        row["sigma1"] = json_natural(r.sigma1);
        row["upper"] = json_natural(r.upper);
        row["on_bound"] = r.on_bound;
        row["min_k"] = json_natural(r.min_k);
        row["t_first"] = json_natural(r.t_first);
        out.push_back(std::move(row));
    }
    return out.dump(2) + "\n";
}

const std::vector<unsigned>& expected_k_set_100() {
    static const std::vector<unsigned> ks{1, 2,  3,  4,  5,  6,  7,  8,  9,  10,
                                          11, 12, 13, 14, 15, 18, 19, 22, 29, 40};
    return ks;
}

std::optional<Natural> expected_peak_sigma(const Natural& n) {
    if (n < 11) return std::nullopt;
    const Natural offset = n - 11;
    const Natural block = offset / 5;
    const Natural phase = offset % 5;
    return 11 + 4 * block + (phase < 3 ? 0 : 2);
}

json symmetry_report(const Natural& a_min_limit, bool full_range, int jobs) {
    const SymmetrySurvey survey = symmetry_survey(a_min_limit, full_range, jobs);
    json rows = json::array();
    for (const auto& row : survey.rows) {
        rows.push_back({{"n", json_natural(row.n)},
                        {"a_min", json_natural(row.a_min)},
                        {"d_max", json_natural(row.d_max)},
                        {"matches", json_natural(row.matches)},
                        {"ratio", Ratio::of(row.matches, row.d_max).exact()}});
    }
    const double agg = survey.aggregate.value();
    const bool in_band = agg >= kSymmetryLow && agg <= kSymmetryHigh;
    return {{"report", "symmetry"},
            {"a_min_limit", json_natural(a_min_limit)},
            {"window", full_range ? "full" : "trough"},
            {"per_n", std::move(rows)},
            {"aggregate", survey.aggregate.exact()},
            {"band", json::array({"1/2", "7/10"})},
            {"verdict", to_string(in_band ? Verdict::pass : Verdict::fail)}};
}

json kset_report(const Natural& n) {
    const auto minimal = k_set(n, KConvention::minimal);
    const auto existential = k_set(n, KConvention::existential);
    json out = {{"report", "kset"},
                {"n", json_natural(n)},
                {"minimal", json_naturals(minimal)},
                {"existential", json_naturals(existential)}};
    if (n == 100) {
        std::vector<Natural> expected(expected_k_set_100().begin(), expected_k_set_100().end());
        std::vector<Natural> missing, extra;
        for (const auto& k : expected)
            if (!std::binary_search(minimal.begin(), minimal.end(), k)) missing.push_back(k);
        for (const auto& k : minimal)
            if (!std::binary_search(expected.begin(), expected.end(), k)) extra.push_back(k);
        const bool match = minimal == expected || existential == expected;
        out["expected"] = json_naturals(expected);
        out["missing_from_minimal"] = json_naturals(missing);
        out["extra_in_minimal"] = json_naturals(extra);
        out["verdict"] = to_string(match ? Verdict::pass : Verdict::fail);
    } else {
        out["verdict"] = to_string(Verdict::indeterminate);
    }
    return out;
}

json offbound_report(const Natural& n_from, const Natural& n_to, const Natural& min_from,
                     const Natural& min_to) {
    json peaks = json::array();
    bool peaks_ok = true;
    for (const auto& p : offbound_peaks(n_from, n_to)) {
        const auto expected = expected_peak_sigma(p.n);
        Verdict v = Verdict::indeterminate;
        if (expected) v = (p.at_expected && p.ties == 1 && p.sigma_peak == *expected) ? Verdict::pass
                                                                                     : Verdict::fail;
        if (v == Verdict::fail) peaks_ok = false;
        peaks.push_back({{"n", json_natural(p.n)},
                         {"a_peak", json_natural(p.a_peak)},
                         {"sigma_peak", json_natural(p.sigma_peak)},
                         {"ties", p.ties},
                         {"at_n2_plus_n_minus_1", p.at_expected},
                         {"expected_sigma", expected ? json_natural(*expected) : json(nullptr)},
                         {"verdict", to_string(v)}});
    }
    json minima = json::array();
    bool minima_ok = true;
    for (Natural n = min_from; n <= min_to; ++n) {
        const auto points = offbound_minima(n);
        const Natural pivot = trough_pivot(n);
        const bool ok = points.size() == 2 && points[0] < pivot && pivot < points[1];
        minima_ok = minima_ok && ok;
        minima.push_back({{"n", json_natural(n)},
                          {"points", json_naturals(points)},
                          {"verdict", to_string(ok ? Verdict::pass : Verdict::fail)}});
    }
    return {{"report", "offbound"},
            {"peaks", std::move(peaks)},
            {"peaks_verdict", to_string(peaks_ok ? Verdict::pass : Verdict::fail)},
            {"minima", std::move(minima)},
            {"minima_verdict", to_string(minima_ok ? Verdict::pass : Verdict::fail)}};
}

json conjecture1_report(const Natural& a_max, const Natural& k_max, const Natural& s_max) {
    json entries = json::array();
    std::size_t passed = 0, failed = 0, open = 0;
    for (Natural a = 1; a <= a_max; ++a) {
        if (is_perfect_square(a) || is_perfect_square(a + 1)) continue;
        for (Natural k = 1; k <= k_max; ++k) {
            const auto r = conjecture1_probe(a, k, s_max);
            switch (r.verdict) {
                case Verdict::pass: ++passed; break;
                case Verdict::fail: ++failed; break;
                case Verdict::indeterminate: ++open; break;
            }
            entries.push_back({{"a", json_natural(a)},
                               {"k", json_natural(k)},
                               {"witness", r.witness ? json_natural(*r.witness) : json(nullptr)},
                               {"searched_to", json_natural(r.searched_to)},
                               {"exhaustive", r.exhaustive},
                               {"flagged", r.verdict != Verdict::pass},
                               {"verdict", to_string(r.verdict)}});
        }
    }
    const Verdict overall = failed ? Verdict::fail : (open ? Verdict::indeterminate : Verdict::pass);
    return {{"report", "conjecture1"},
            {"a_max", json_natural(a_max)},
            {"k_max", json_natural(k_max)},
            {"s_max", json_natural(s_max)},
            {"entries", std::move(entries)},
            {"summary", {{"pass", passed}, {"fail", failed}, {"indeterminate", open}}},
            {"verdict", to_string(overall)}};
}

json closure_report(const Natural& a, const Natural& s_max, const Natural& odd_k_max,
                    const Natural& n_max) {
    const auto violations = upward_closure_check(a, s_max);
    json claims = json::array();

    const Natural n = isqrt(a);
    const bool is_square = n * n == a;
    const bool below_square = is_perfect_square(a + 1).has_value();
    if (is_square || below_square) {
        claims.push_back({{"claim", "upward_closed"},
                          {"verdict", to_string(violations.empty() ? Verdict::pass : Verdict::fail)}});
    }
    if (a == n * n + n && n > 1) {
        claims.push_back({{"claim", "3_not_in_S"},
                          {"verdict", to_string(tau(a, 3) == 0 ? Verdict::pass : Verdict::fail)}});
        bool evens = true;
        for (Natural s = 2; s <= s_max; s += 2) evens = evens && tau(a, s) > 0;
        claims.push_back({{"claim", "even_s_in_S"},
                          {"verdict", to_string(evens ? Verdict::pass : Verdict::fail)}});
    }

    json thresholds = json::array();
    for (Natural k = 3; k <= odd_k_max; k += 2) {
        const auto t = odd_k_threshold(k, n_max);
        // a hit in the upper half of the range leaves the threshold unsettled
        const bool settled = !t.last_n || 2 * *t.last_n < n_max;
        thresholds.push_back(
            {{"k", json_natural(k)},
             {"n0", t.last_n ? json_natural(*t.last_n) : json_natural(1)},
             {"n_max", json_natural(n_max)},
             {"verdict", to_string(settled ? Verdict::pass : Verdict::indeterminate)}});
    }

    return {{"report", "closure"},
            {"a", json_natural(a)},
            {"s_max", json_natural(s_max)},
            {"violations", json_naturals(violations)},
            {"claims", std::move(claims)},
            {"odd_k_thresholds", std::move(thresholds)}};
}

}  // namespace ratsq
