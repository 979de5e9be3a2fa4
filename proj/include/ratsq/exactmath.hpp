// Exact integer and quadratic-surd arithmetic.
//
// Every decision in the library (floors of s*sqrt(a), comparisons of bound
// curves, window membership) goes through the routines here. Nothing in this
// header touches floating point except Surd::approx(), which exists for
// drawing only.
#ifndef RATSQ_EXACTMATH_HPP
#define RATSQ_EXACTMATH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace ratsq {

/// Arbitrary-precision integer. `Natural` is the same type used where the
/// value must be non-negative; public entry points check that contract.
using Integer = boost::multiprecision::cpp_int;
using Natural = boost::multiprecision::cpp_int;

using u128 = unsigned __int128;

/// Throws std::domain_error if `x` is negative.
void require_natural(const Integer& x, const char* what);

/// Throws std::domain_error if `x` is below `lo`.
void require_at_least(const Integer& x, long lo, const char* what);

/// Returns `x` as uint64 when it fits, otherwise nothing.
std::optional<std::uint64_t> to_u64(const Integer& x);

/// Floor division for a positive divisor.
Integer floor_div(const Integer& num, const Integer& den);

// ---------------------------------------------------------------------------
// Integer square roots
// ---------------------------------------------------------------------------

/// Largest r with r*r <= n. Newton iteration from a power-of-two seed that is
/// guaranteed to be >= sqrt(n); the iterates then decrease strictly until the
/// first non-decrease, at which point the current iterate is the answer.
std::uint64_t isqrt_u128(u128 n);
Natural isqrt(const Natural& n);

/// The root of n if n is a perfect square.
std::optional<Natural> is_perfect_square(const Natural& n);
bool is_square_u64(std::uint64_t n);

/// Product x*y if it stays below 2^127, the bound of the fixed-width path.
std::optional<u128> checked_mul_127(u128 x, u128 y);

// ---------------------------------------------------------------------------
// Surd
// ---------------------------------------------------------------------------

/// Exact value (p + q*sqrt(d)) / r with q >= 0 and r > 0, or +infinity.
///
/// Canonical form: a perfect-square radicand is folded into p, q == 0 implies
/// d == 0, and gcd(p, q, r) == 1. Two finite surds with equal canonical fields
/// are equal; the converse needs surd_cmp because d is not square-free
/// reduced.
class Surd {
  public:
    Surd() = default;
    Surd(Integer p, Natural q, Natural d, Natural r);

    static Surd infinity();
    static Surd integer(const Integer& v);
    /// sqrt(d) for a natural d.
    static Surd root(const Natural& d);

    bool is_infinite() const { return infinite_; }
    const Integer& p() const { return p_; }
    const Natural& q() const { return q_; }
    const Natural& d() const { return d_; }
    const Natural& r() const { return r_; }

    /// k * this for a natural k; k * infinity is infinity for k >= 1 and 0
    /// for k == 0.
    Surd scaled(const Natural& k) const;

    /// Double approximation. Only for plotting.
    double approx() const;

    /// "(p+q*sqrt(d))/r", "inf", or the reduced integer/fraction form.
    std::string to_string() const;

  private:
    void canonicalize();

    Integer p_ = 0;
    Natural q_ = 0;
    Natural d_ = 0;
    Natural r_ = 1;
    bool infinite_ = false;
};

/// Exact three-way comparison; +infinity exceeds every finite surd and equals
/// itself. Never consults floating point.
std::strong_ordering surd_cmp(const Surd& x, const Surd& y);

inline std::strong_ordering operator<=>(const Surd& x, const Surd& y) { return surd_cmp(x, y); }
inline bool operator==(const Surd& x, const Surd& y) { return surd_cmp(x, y) == 0; }

/// floor((p + q*sqrt(d)) / r), computed as floor((p + isqrt(q^2 d)) / r).
///
/// Valid because for r > 0 and integer p, floor((p + X)/r) equals
/// floor(floor(p + X)/r) for any real X, and floor(p + q*sqrt(d)) is
/// p + isqrt(q^2 d) when q >= 0. Throws std::domain_error on +infinity.
Integer floor_surd(const Surd& x);

/// Sign of u + v*sqrt(d1) + w*sqrt(d2) for arbitrary-sign integer
/// coefficients, by isolating one radical and squaring.
int sign_two_radicals(const Integer& u, const Integer& v, const Natural& d1, const Integer& w,
                      const Natural& d2);

/// Exact ordering of s against k*(sqrt(a) + sqrt(a+1)). Requires a >= 1 and
/// k >= 1.
std::strong_ordering cmp_int_vs_sum_sqrt(const Natural& s, const Natural& k, const Natural& a);

}  // namespace ratsq

#endif  // RATSQ_EXACTMATH_HPP
