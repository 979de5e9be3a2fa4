// Continued fractions of square roots, convergents, and the first rational
// (smallest denominator, then smallest numerator) in an open interval whose
// endpoints are square roots of naturals.
#ifndef RATSQ_CONFRAC_HPP
#define RATSQ_CONFRAC_HPP

#include "ratsq/exactmath.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ratsq {

/// Reduced non-negative fraction num/den with den >= 1.
struct Fraction {
    Natural num = 0;
    Natural den = 1;

    /// Reduces by the gcd. Throws std::domain_error on den == 0.
    static Fraction reduced(const Natural& num, const Natural& den);

    std::string to_string() const { return num.str() + "/" + den.str(); }
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Exact order of num/den against sqrt(d).
std::strong_ordering cmp_fraction_sqrt(const Fraction& f, const Natural& d);

/// [a0; body...] where body either repeats forever (square roots of
/// non-squares) or ends (rationals).
struct CFExpansion {
    enum class Kind { periodic, finite };

    Natural a0 = 0;
    std::vector<Natural> body;
    Kind kind = Kind::finite;

    /// Partial quotient j (j == 0 is a0). Periodic expansions are unrolled on
    /// demand; finite ones throw std::out_of_range past their end.
    const Natural& term(std::size_t j) const;

    /// "[a0; (p1, p2, ...)]" for periodic, "[a0; b1, b2]" for finite.
    std::string to_string() const;
};

/// Lazy generator for the partial quotients of sqrt(d), via the classical
/// (m, den, a) recurrence. For square d it yields a0 and then stops.
class SqrtCfStream {
  public:
    explicit SqrtCfStream(const Natural& d);

    /// Next partial quotient, or nothing once a finite expansion is exhausted.
    std::optional<Natural> next();
    bool rational() const { return rational_; }

  private:
    Natural d_;
    Natural a0_;
    Natural m_ = 0;
    Natural den_ = 1;
    Natural a_ = 0;
    bool started_ = false;
    bool rational_ = false;
};

/// Full expansion of sqrt(d), d >= 1: finite [isqrt(d)] for squares, otherwise
/// a0 plus one whole period (the (m, den) state returns to its first value).
CFExpansion sqrt_cf(const Natural& d);

/// Value of a finite continued fraction [t0; t1, ..., tn].
Fraction evaluate_cf(std::span<const Natural> terms);

/// Convergent p_j / q_j of an expansion.
Fraction convergent(const CFExpansion& cf, std::size_t j);

/// The real number sqrt(radicand).
struct QuadraticEndpoint {
    Natural radicand;
};

/// First rational in the open interval (sqrt(x), sqrt(y)) under the
/// denominator-first ordering. Irrational endpoints use the continued-fraction
/// rule; any rational endpoint goes through the Stern-Brocot descent.
/// Throws std::domain_error when sqrt(x) >= sqrt(y).
Fraction first_rational_between(const QuadraticEndpoint& x, const QuadraticEndpoint& y);

/// Continued-fraction rule: expand both endpoints until the first differing
/// quotient and close with min(a_k, b_k) + 1. Requires both endpoints
/// irrational.
Fraction first_rational_cf_rule(const QuadraticEndpoint& x, const QuadraticEndpoint& y);

/// Stern-Brocot descent with exact comparisons at every branch. Runs of equal
/// turns are taken in one step by exponential and binary search.
Fraction first_rational_stern_brocot(const QuadraticEndpoint& x, const QuadraticEndpoint& y);

}  // namespace ratsq

#endif  // RATSQ_CONFRAC_HPP
