// tau_s(a), T_s(a), sigma(a) and the bound family around sigma.
//
//   tau_s(a)  number of integers t with s^2 a < t^2 < s^2 (a+1)
//   T_s(a)    those t
//   sigma(a)  least s with tau_s(a) > 0 (always >= 2)
//
// Bounds are built from the frame a = n^2 + b = m^2 - c (see Decomposition).
#ifndef RATSQ_SIGMACORE_HPP
#define RATSQ_SIGMACORE_HPP

#include "ratsq/exactmath.hpp"

#include <stdexcept>
#include <vector>

namespace ratsq {

/// a = n^2 + b with n = isqrt(a), 0 <= b <= 2n; a = m^2 - c with m = n + 1,
/// 1 <= c <= 2m - 1.
struct Decomposition {
    Natural a, n, b, m, c;
};

Decomposition decompose(const Natural& a);

/// isqrt(s^2 (a+1)) - isqrt(s^2 a) - [a+1 is a square]. Uses 128-bit
/// arithmetic while s^2 (a+1) < 2^127.
Natural tau(const Natural& a, const Natural& s);

/// Direct count of t above isqrt(s^2 a) with both strict inequalities
/// checked per candidate. Reference for tau.
Natural tau_brute(const Natural& a, const Natural& s);

/// T_s(a), ascending.
std::vector<Natural> t_set(const Natural& a, const Natural& s);

enum class SigmaStrategy { scan, cf };

/// Least s >= 2 with tau(a, s) > 0.
Natural sigma(const Natural& a, SigmaStrategy strategy = SigmaStrategy::scan);

/// Scan variant with an explicit start; `from_two` ignores the sigma_1 skip
/// so the lower bound itself can be checked.
Natural sigma_scan(const Natural& a, bool from_two = false);

/// (n + sqrt(a+1)) / (b+1) and (m + sqrt(a)) / c.
Surd sigma_l(const Natural& a);
Surd sigma_r(const Natural& a);

/// sigma_l(a-1) and sigma_r(a+1) evaluated in a's own frame, i.e. with b or c
/// shifted by one: (n + sqrt(a)) / b and (m + sqrt(a+1)) / (c-1). A zero
/// denominator gives +infinity.
Surd sigma_l_left_probe(const Natural& a);
Surd sigma_r_right_probe(const Natural& a);

/// floor(max(k sigma_l, k sigma_r)) + 1.
Natural sigma_k(const Natural& a, const Natural& k);

/// sigma_1(a) <= sigma(a) <= ceil(sqrt(a) + sqrt(a+1)) = isqrt(4a+2) + 1.
Natural sigma_lower(const Natural& a);
Natural sigma_upper(const Natural& a);

/// True iff floor(sigma_l(a)) < floor(sigma_l(a-1)) or
/// floor(sigma_r(a)) < floor(sigma_r(a+1)), neighbours taken with the probes
/// above. Equivalent to sigma(a) == sigma_1(a). Requires a >= 2.
bool on_bound_criterion(const Natural& a);

class MinKNotFound : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Smallest k with sigma_k(a, k) == sigma(a). Throws MinKNotFound when no
/// k <= sigma(a) works.
Natural min_k(const Natural& a);
/// Same, with sigma(a) already known.
Natural min_k(const Natural& a, const Natural& sigma_value);

enum class Crowding { left, right };

/// Closed interval [lo, hi] of denominators s with tau_s(a) == 0, indexed by
/// the crowding offset k.
struct ZeroWindow {
    Natural k;
    Surd lo;
    Surd hi;
    Crowding side = Crowding::left;

    bool contains(const Natural& s) const;
};

/// Left-crowding windows k(n+sqrt a)/b <= s <= (k+1)(n+sqrt(a+1))/(b+1) and
/// right-crowding windows k(m+sqrt(a+1))/(c-1) <= s <= (k+1)(m+sqrt a)/c for
/// 0 <= k <= k_max. With a zero denominator (b == 0, c == 1) the lower end is
/// 0 for k == 0 and +infinity otherwise; empty windows are dropped.
std::vector<ZeroWindow> zero_windows(const Natural& a, const Natural& k_max);

}  // namespace ratsq

#endif  // RATSQ_SIGMACORE_HPP
