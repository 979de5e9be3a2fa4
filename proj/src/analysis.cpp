#include "ratsq/analysis.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <stdexcept>

namespace ratsq {

namespace {

std::size_t range_count(const Natural& from, const Natural& to, const char* what) {
    if (from > to) throw std::domain_error(std::string(what) + ": empty range");
    const auto count = to_u64(to - from + 1);
    if (!count || *count > (std::uint64_t{1} << 40))
        throw std::domain_error(std::string(what) + ": range too large");
    return static_cast<std::size_t>(*count);
}

int thread_count(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

// Runs body(i) for i in [0, count) across threads. The first exception
// raised by any iteration is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t count, int jobs, Body body) {
    std::exception_ptr failure;
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 8) num_threads(thread_count(jobs))
    for (long long i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(ratsq_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

void check_record(const SweepRecord& r) {
    if (!(r.sigma1 <= r.sigma && r.sigma <= r.upper))
        throw std::logic_error("sigma outside [sigma_1, upper] at a = " + r.a.str());
    if (r.on_bound != (r.sigma == r.sigma1))
        throw std::logic_error("on_bound flag inconsistent at a = " + r.a.str());
    if (tau(r.a, r.sigma) != 1) throw std::logic_error("tau(a, sigma) != 1 at a = " + r.a.str());
}

}  // namespace

SweepRecord make_record(const Natural& a) {
    SweepRecord r;
    r.a = a;
    r.sigma = sigma(a);
    r.sigma1 = sigma_lower(a);
    r.upper = sigma_upper(a);
    r.on_bound = r.sigma == r.sigma1;
    r.min_k = min_k(a, r.sigma);
    const auto witnesses = t_set(a, r.sigma);
    if (witnesses.size() != 1)
        throw std::logic_error("T_sigma(a) is not a singleton at a = " + a.str());
    r.t_first = witnesses.front();
    check_record(r);
    return r;
}

std::vector<SweepRecord> sweep(const Natural& a_from, const Natural& a_to, int jobs) {
    require_at_least(a_from, 1, "a_from");
    const std::size_t count = range_count(a_from, a_to, "sweep");
    std::vector<SweepRecord> out(count);
    parallel_for(count, jobs, [&](std::size_t i) { out[i] = make_record(a_from + i); });
    return out;
}

std::vector<SweepRecord> sweep_serial(const Natural& a_from, const Natural& a_to) {
    require_at_least(a_from, 1, "a_from");
    const std::size_t count = range_count(a_from, a_to, "sweep");
    std::vector<SweepRecord> out;
    out.reserve(count);
    for (Natural a = a_from; a <= a_to; ++a) out.push_back(make_record(a));
    return out;
}

std::vector<Natural> sigma_table(const Natural& a_from, const Natural& a_to, int jobs) {
    require_at_least(a_from, 1, "a_from");
    const std::size_t count = range_count(a_from, a_to, "sigma_table");
    std::vector<Natural> out(count);
    parallel_for(count, jobs, [&](std::size_t i) { out[i] = sigma(a_from + i); });
    return out;
}

std::vector<Natural> sigma_table_serial(const Natural& a_from, const Natural& a_to) {
    require_at_least(a_from, 1, "a_from");
    std::vector<Natural> out;
    out.reserve(range_count(a_from, a_to, "sigma_table"));
    for (Natural a = a_from; a <= a_to; ++a) out.push_back(sigma(a));
    return out;
}

std::size_t TauGrid::width() const { return static_cast<std::size_t>(s_max - s_min + 1); }
std::size_t TauGrid::height() const { return static_cast<std::size_t>(a_max - a_min + 1); }

namespace {

TauGrid empty_grid(const Natural& a_min, const Natural& a_max, const Natural& s_min,
                   const Natural& s_max) {
    require_at_least(a_min, 1, "a_min");
    require_at_least(s_min, 1, "s_min");
    TauGrid g{a_min, a_max, s_min, s_max, {}};
    const std::size_t rows = range_count(a_min, a_max, "tau grid a range");
    const std::size_t cols = range_count(s_min, s_max, "tau grid s range");
    g.values.assign(rows * cols, 0);
    return g;
}

std::uint32_t tau_cell(const Natural& a, const Natural& s) {
    const Natural t = tau(a, s);
    if (t > 0xffffffffu) throw std::overflow_error("tau value exceeds grid cell width");
    return static_cast<std::uint32_t>(t);
}

}  // namespace

TauGrid tau_grid(const Natural& a_min, const Natural& a_max, const Natural& s_min,
                 const Natural& s_max, int jobs) {
    TauGrid g = empty_grid(a_min, a_max, s_min, s_max);
    const std::size_t cols = g.width();
    parallel_for(g.height(), jobs, [&](std::size_t row) {
        const Natural a = a_min + row;
        for (std::size_t col = 0; col < cols; ++col)
            g.values[row * cols + col] = tau_cell(a, s_min + col);
    });
    return g;
}

TauGrid tau_grid_serial(const Natural& a_min, const Natural& a_max, const Natural& s_min,
                        const Natural& s_max) {
    TauGrid g = empty_grid(a_min, a_max, s_min, s_max);
    const std::size_t cols = g.width();
    for (std::size_t row = 0; row < g.height(); ++row)
        for (std::size_t col = 0; col < cols; ++col)
            g.values[row * cols + col] = tau_cell(a_min + row, s_min + col);
    return g;
}

TauProfile tau_profile(const Natural& a, const Natural& s_max) {
    require_at_least(s_max, 1, "s_max");
    TauProfile p{a, s_max, {}};
    bool seen_positive = false;
    for (Natural s = 1; s <= s_max; ++s) {
        Natural t = tau(a, s);
        if (!p.counts.empty()) {
            const Natural& prev = p.counts.back();
            if (t > prev + 1 || prev > t + 1)
                throw std::logic_error("tau jumps by more than one at a = " + a.str());
        }
        if (!seen_positive && t > 0) {
            if (t != 1) throw std::logic_error("first positive tau is not 1 at a = " + a.str());
            seen_positive = true;
        }
        p.counts.push_back(std::move(t));
    }
    return p;
}

Ratio Ratio::of(const Natural& num, const Natural& den) {
    if (den <= 0) throw std::domain_error("ratio denominator must be positive");
    Natural g = boost::multiprecision::gcd(num, den);
    if (g == 0) g = 1;
    return Ratio{num / g, den / g};
}

std::string Ratio::exact() const { return num.str() + "/" + den.str(); }

double Ratio::value() const { return num.convert_to<double>() / den.convert_to<double>(); }

Ratio on_bound_fraction(const std::vector<SweepRecord>& records) {
    if (records.empty()) throw std::domain_error("on_bound_fraction: no records");
    const auto hits = std::count_if(records.begin(), records.end(),
                                    [](const SweepRecord& r) { return r.on_bound; });
    return Ratio::of(Natural(hits), Natural(records.size()));
}

Ratio on_bound_fraction(const Natural& a_from, const Natural& a_to, int jobs) {
    require_at_least(a_from, 1, "a_from");
    const std::size_t count = range_count(a_from, a_to, "on_bound_fraction");
    std::vector<char> hit(count, 0);
    parallel_for(count, jobs, [&](std::size_t i) {
        const Natural a = a_from + i;
        hit[i] = sigma(a) == sigma_lower(a);
    });
    return Ratio::of(Natural(std::count(hit.begin(), hit.end(), 1)), Natural(count));
}

Ratio symmetry_stats(const Natural& n, const Natural& d_max) {
    require_at_least(n, 2, "n");
    require_at_least(d_max, 1, "d_max");
    if (d_max > n) throw std::domain_error("d_max must not exceed n");
    const Natural a_min = n * (n + 1);
    Natural matches = 0;
    for (Natural d = 1; d <= d_max; ++d)
        if (sigma(a_min - d) == sigma(a_min + d)) ++matches;
    return Ratio::of(matches, d_max);
}

SymmetrySurvey symmetry_survey(const Natural& a_min_limit, bool full_range, int jobs) {
    SymmetrySurvey out;
    Natural n = 2;
    while (n * (n + 1) <= a_min_limit) {
        const Natural a_min = n * (n + 1);
        out.rows.push_back(SymmetryRow{n, a_min, full_range ? a_min - 1 : n, 0});
        ++n;
    }
    if (out.rows.empty()) throw std::domain_error("symmetry_survey: no trough below the limit");
    const Natural& last = out.rows.back().a_min;
    const Natural hi = last + out.rows.back().d_max;
    const std::vector<Natural> table = sigma_table(1, hi, jobs);
    auto sig = [&](const Natural& a) -> const Natural& {
        return table[static_cast<std::size_t>(a - 1)];
    };
    Natural total = 0, matched = 0;
    for (auto& row : out.rows) {
        for (Natural d = 1; d <= row.d_max; ++d)
            if (sig(row.a_min - d) == sig(row.a_min + d)) ++row.matches;
        total += row.d_max;
        matched += row.matches;
    }
    out.aggregate = Ratio::of(matched, total);
    return out;
}

std::vector<OffBoundPoint> off_bound_points(const Natural& a_from, const Natural& a_to, int jobs) {
    const std::vector<Natural> table = sigma_table(a_from, a_to, jobs);
    std::vector<OffBoundPoint> out;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const Natural a = a_from + i;
        if (table[i] > sigma_lower(a)) out.push_back(OffBoundPoint{a, table[i]});
    }
    return out;
}

std::vector<OffBoundPeak> offbound_peaks(const Natural& n_from, const Natural& n_to) {
    require_at_least(n_from, 2, "n_from");
    if (n_from > n_to) throw std::domain_error("offbound_peaks: empty range");
    std::vector<OffBoundPeak> out;
    for (Natural n = n_from; n <= n_to; ++n) {
        const auto points = off_bound_points(n * n + 1, (n + 1) * (n + 1) - 1);
        OffBoundPeak peak{n, 0, 0, 0, false};
        for (const auto& p : points) {
            if (p.sigma > peak.sigma_peak) {
                peak.sigma_peak = p.sigma;
                peak.a_peak = p.a;
                peak.ties = 1;
            } else if (p.sigma == peak.sigma_peak) {
                ++peak.ties;
            }
        }
        peak.at_expected = peak.ties > 0 && peak.a_peak == n * n + n - 1;
        out.push_back(peak);
    }
    return out;
}

std::vector<Natural> offbound_minima(const Natural& n) {
    require_at_least(n, 7, "n");
    std::vector<Natural> out;
    for (const auto& p : off_bound_points(n * n + 1, (n + 1) * (n + 1) - 1))
        if (p.sigma == 5) out.push_back(p.a);
    return out;
}

std::vector<Natural> k_set(const Natural& n, KConvention convention) {
    require_at_least(n, 2, "n");
    const Natural lo = n * n + 1;
    const Natural hi = (n + 1) * (n + 1) - 1;
    const std::vector<Natural> table = sigma_table(lo, hi);
    std::vector<Natural> ks;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const Natural a = lo + i;
        const Natural& s = table[i];
        if (convention == KConvention::minimal) {
            ks.push_back(min_k(a, s));
            continue;
        }
        for (Natural k = 1; k <= s; ++k) {
            const Natural v = sigma_k(a, k);
            if (v == s) ks.push_back(k);
            if (v > s) break;
        }
    }
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

Conjecture1Result conjecture1_probe(const Natural& a, const Natural& k, const Natural& s_max) {
    require_at_least(a, 1, "a");
    require_at_least(k, 1, "k");
    require_at_least(s_max, 1, "s_max");
    if (is_perfect_square(a) || is_perfect_square(a + 1))
        throw std::domain_error("conjecture 1 excludes a or a+1 square");
    Conjecture1Result r{a, k, std::nullopt, Verdict::indeterminate, 0, false};
    Natural current = tau(a, 1);
    for (Natural s = 1; s <= s_max; ++s) {
        r.searched_to = s;
        if (cmp_int_vs_sum_sqrt(s + 1, k, a) == std::strong_ordering::greater) {
            // tau_{s'} >= k for every s' >= s + 1
            r.verdict = Verdict::fail;
            r.exhaustive = true;
            return r;
        }
        Natural next = tau(a, s + 1);
        if (current == k && next + 1 == k) {
            r.witness = s;
            r.verdict = Verdict::pass;
            return r;
        }
        current = std::move(next);
    }
    return r;
}

std::optional<Natural> conjecture1_search(const Natural& a, const Natural& k, const Natural& s_max) {
    return conjecture1_probe(a, k, s_max).witness;
}

std::vector<Natural> upward_closure_check(const Natural& a, const Natural& s_max) {
    require_at_least(a, 1, "a");
    std::vector<Natural> violations;
    if (s_max < 1) return violations;
    Natural current = tau(a, 1);
    for (Natural s = 1; s <= s_max; ++s) {
        Natural next = tau(a, s + 1);
        if (current > 0 && next == 0) violations.push_back(s);
        current = std::move(next);
    }
    return violations;
}

OddKThreshold odd_k_threshold(const Natural& k, const Natural& n_max) {
    require_at_least(k, 3, "k");
    if (k % 2 == 0) throw std::domain_error("odd_k_threshold: k must be odd");
    require_at_least(n_max, 2, "n_max");
    OddKThreshold out{k, std::nullopt, n_max};
    for (Natural n = 2; n <= n_max; ++n)
        if (tau(n * n + n, k) > 0) out.last_n = n;
    return out;
}

}  // namespace ratsq
