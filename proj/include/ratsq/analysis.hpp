// Sweeps over a and the empirical checks built on them.
//
// The batch kernels (sweep, sigma_table, tau_grid) come in two flavours: an
// OpenMP version that splits the a range across threads, and a plain serial
// loop kept as the reference the parallel one is tested against. Both write
// into a vector indexed by a, so the result does not depend on the thread
// count.
#ifndef RATSQ_ANALYSIS_HPP
#define RATSQ_ANALYSIS_HPP

#include "ratsq/sigmacore.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ratsq {

/// Everything the sigma plots need for one a.
struct SweepRecord {
    Natural a;
    Natural sigma;
    Natural sigma1;
    Natural upper;
    bool on_bound = false;
    Natural min_k;
    Natural t_first;  ///< the single element of T_sigma(a)
};

/// Builds and validates a record; throws std::logic_error if
/// sigma1 <= sigma <= upper, on_bound <=> sigma == sigma1 or
/// tau(a, sigma) == 1 fails.
SweepRecord make_record(const Natural& a);

/// jobs <= 0 means one thread per available core.
std::vector<SweepRecord> sweep(const Natural& a_from, const Natural& a_to, int jobs = 0);
std::vector<SweepRecord> sweep_serial(const Natural& a_from, const Natural& a_to);

/// sigma(a) for a_from..a_to.
std::vector<Natural> sigma_table(const Natural& a_from, const Natural& a_to, int jobs = 0);
std::vector<Natural> sigma_table_serial(const Natural& a_from, const Natural& a_to);

/// tau_s(a), row-major by a then s, for the closed ranges given.
struct TauGrid {
    Natural a_min, a_max, s_min, s_max;
    std::vector<std::uint32_t> values;

    std::size_t width() const;   ///< number of s values
    std::size_t height() const;  ///< number of a values
    std::uint32_t at(std::size_t a_index, std::size_t s_index) const {
        return values[a_index * width() + s_index];
    }
};

TauGrid tau_grid(const Natural& a_min, const Natural& a_max, const Natural& s_min,
                 const Natural& s_max, int jobs = 0);
TauGrid tau_grid_serial(const Natural& a_min, const Natural& a_max, const Natural& s_min,
                        const Natural& s_max);

/// tau_1(a) .. tau_{s_max}(a). Adjacent entries differ by at most one and the
/// first positive entry is 1 (checked on construction).
struct TauProfile {
    Natural a;
    Natural s_max;
    std::vector<Natural> counts;
};

TauProfile tau_profile(const Natural& a, const Natural& s_max);

/// Exact ratio num/den, reduced.
struct Ratio {
    Natural num = 0;
    Natural den = 1;

    static Ratio of(const Natural& num, const Natural& den);
    std::string exact() const;  ///< "num/den"
    double value() const;
};

Ratio on_bound_fraction(const std::vector<SweepRecord>& records);
Ratio on_bound_fraction(const Natural& a_from, const Natural& a_to, int jobs = 0);

/// Fraction of 1 <= d <= d_max with sigma(a_min - d) == sigma(a_min + d),
/// a_min = n(n+1). Requires n >= 2 and 1 <= d_max <= n.
Ratio symmetry_stats(const Natural& n, const Natural& d_max);

struct SymmetryRow {
    Natural n;
    Natural a_min;
    Natural d_max;
    Natural matches;
};

struct SymmetrySurvey {
    std::vector<SymmetryRow> rows;
    Ratio aggregate;
};

/// One row per trough with 2 <= n and n(n+1) <= a_min_limit. The default
/// window is 1 <= d <= n; `full_range` uses 1 <= d < a_min instead.
SymmetrySurvey symmetry_survey(const Natural& a_min_limit, bool full_range = false, int jobs = 0);

struct OffBoundPoint {
    Natural a;
    Natural sigma;
};

/// Points with sigma(a) > sigma_1(a), ascending.
std::vector<OffBoundPoint> off_bound_points(const Natural& a_from, const Natural& a_to,
                                            int jobs = 0);

struct OffBoundPeak {
    Natural n;
    Natural a_peak;       ///< smallest a attaining the maximum
    Natural sigma_peak;
    std::size_t ties = 0;  ///< number of a attaining the maximum
    bool at_expected = false;  ///< a_peak == n^2 + n - 1
};

/// Largest off-bound sigma strictly between n^2 and (n+1)^2, for each n.
std::vector<OffBoundPeak> offbound_peaks(const Natural& n_from, const Natural& n_to);

/// Off-bound a in (n^2, (n+1)^2) with sigma(a) == 5. Requires n >= 7.
std::vector<Natural> offbound_minima(const Natural& n);

enum class KConvention { minimal, existential };

/// k values realising sigma(a) == sigma_k(a) for n^2 < a < (n+1)^2, sorted.
/// `minimal` takes min_k(a) per a, `existential` every k <= sigma(a).
std::vector<Natural> k_set(const Natural& n, KConvention convention);

enum class Verdict { pass, fail, indeterminate };
const char* to_string(Verdict v);

struct Conjecture1Result {
    Natural a;
    Natural k;
    std::optional<Natural> witness;  ///< smallest s with tau_s = k, tau_{s+1} = k-1
    Verdict verdict = Verdict::indeterminate;
    Natural searched_to;  ///< last s examined
    /// True when the search stopped because s + 1 > k(sqrt a + sqrt(a+1)):
    /// from there on tau >= k, so no later witness exists.
    bool exhaustive = false;
};

/// Smallest s <= s_max with tau_s(a) == k and tau_{s+1}(a) == k - 1.
/// Requires that neither a nor a+1 is a square, and k >= 1.
std::optional<Natural> conjecture1_search(const Natural& a, const Natural& k, const Natural& s_max);

/// Same search with a verdict: pass (witness), fail (ruled out for every s),
/// indeterminate (s_max reached first).
Conjecture1Result conjecture1_probe(const Natural& a, const Natural& k, const Natural& s_max);

/// s in 1..s_max with tau_s(a) > 0 and tau_{s+1}(a) == 0.
std::vector<Natural> upward_closure_check(const Natural& a, const Natural& s_max);

struct OddKThreshold {
    Natural k;
    std::optional<Natural> last_n;  ///< largest n <= n_max with k in S(n^2 + n)
    Natural n_max;
};

/// For odd k >= 3, the largest n in [2, n_max] with tau_k(n^2 + n) > 0.
OddKThreshold odd_k_threshold(const Natural& k, const Natural& n_max);

}  // namespace ratsq

#endif  // RATSQ_ANALYSIS_HPP
