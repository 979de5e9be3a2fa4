#include "ratsq/exactmath.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ratsq {

namespace mp = boost::multiprecision;

namespace {

constexpr std::uint64_t kLow64 = ~std::uint64_t{0};

unsigned bit_length(u128 n) {
    unsigned bits = 0;
    while (n != 0) {
        n >>= 1;
        ++bits;
    }
    return bits;
}

std::optional<u128> to_u128(const Natural& n) {
    if (n < 0 || (n != 0 && mp::msb(n) >= 128)) return std::nullopt;
    const auto lo = static_cast<std::uint64_t>(n & kLow64);
    const auto hi = static_cast<std::uint64_t>(n >> 64);
    return (static_cast<u128>(hi) << 64) | lo;
}

int sign_of(const Integer& x) { return x.sign(); }

// sign(u + v*sqrt(d)) for arbitrary-sign u, v and d >= 0.
int sign_one_radical(const Integer& u, const Integer& v, const Natural& d) {
    const int su = sign_of(u);
    const int sv = d == 0 ? 0 : sign_of(v);
    if (sv == 0) return su;
    if (su == 0 || su == sv) return sv;
    const Integer lhs = u * u;
    const Integer rhs = v * v * d;
    if (lhs > rhs) return su;
    if (lhs < rhs) return sv;
    return 0;
}

std::strong_ordering from_sign(int s) {
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace

void require_natural(const Integer& x, const char* what) {
    if (x < 0) throw std::domain_error(std::string(what) + " must be non-negative");
}

void require_at_least(const Integer& x, long lo, const char* what) {
    if (x < lo) throw std::domain_error(std::string(what) + " must be >= " + std::to_string(lo));
}

std::optional<std::uint64_t> to_u64(const Integer& x) {
    if (x < 0 || (x != 0 && mp::msb(x) >= 64)) return std::nullopt;
    return static_cast<std::uint64_t>(x);
}

Integer floor_div(const Integer& num, const Integer& den) {
    if (den <= 0) throw std::domain_error("floor_div: divisor must be positive");
    Integer q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

std::uint64_t isqrt_u128(u128 n) {
    if (n < 2) return static_cast<std::uint64_t>(n);
    // 2^ceil(bits/2) >= sqrt(n)
    u128 x = u128{1} << ((bit_length(n) + 1) / 2);
    for (;;) {
        const u128 y = (x + n / x) >> 1;
        if (y >= x) return static_cast<std::uint64_t>(x);
        x = y;
    }
}

Natural isqrt(const Natural& n) {
    require_natural(n, "isqrt argument");
    if (auto small = to_u128(n)) return Natural(isqrt_u128(*small));
    Natural x = Natural(1) << ((mp::msb(n) + 2) / 2);
    for (;;) {
        Natural y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = std::move(y);
    }
}

std::optional<Natural> is_perfect_square(const Natural& n) {
    Natural r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

bool is_square_u64(std::uint64_t n) {
    const std::uint64_t r = isqrt_u128(n);
    return r * r == n;
}

std::optional<u128> checked_mul_127(u128 x, u128 y) {
    if (x == 0 || y == 0) return u128{0};
    if (bit_length(x) + bit_length(y) > 127) return std::nullopt;
    return x * y;
}

// ---------------------------------------------------------------------------

Surd::Surd(Integer p, Natural q, Natural d, Natural r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
    require_natural(q_, "surd coefficient q");
    require_natural(d_, "surd radicand d");
    if (r_ <= 0) throw std::domain_error("surd denominator r must be positive");
    canonicalize();
}

Surd Surd::infinity() {
    Surd s;
    s.infinite_ = true;
    return s;
}

Surd Surd::integer(const Integer& v) { return Surd(v, 0, 0, 1); }

Surd Surd::root(const Natural& d) { return Surd(0, 1, d, 1); }

void Surd::canonicalize() {
    if (q_ != 0 && d_ != 0) {
        if (auto root = is_perfect_square(d_)) {
            p_ += q_ * *root;
            q_ = 0;
        }
    }
    if (q_ == 0 || d_ == 0) {
        q_ = 0;
        d_ = 0;
    }
    Natural g = mp::gcd(mp::gcd(mp::abs(p_), q_), r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

Surd Surd::scaled(const Natural& k) const {
    require_natural(k, "surd scale");
    if (infinite_) return k == 0 ? Surd::integer(0) : *this;
    return Surd(p_ * k, q_ * k, d_, r_);
}

double Surd::approx() const {
    if (infinite_) return std::numeric_limits<double>::infinity();
    const double root = std::sqrt(d_.convert_to<double>());
    return (p_.convert_to<double>() + q_.convert_to<double>() * root) / r_.convert_to<double>();
}

std::string Surd::to_string() const {
    if (infinite_) return "inf";
    if (q_ == 0) return r_ == 1 ? p_.str() : p_.str() + "/" + r_.str();
    std::string out = "(" + p_.str() + "+" + q_.str() + "*sqrt(" + d_.str() + "))";
    if (r_ != 1) out += "/" + r_.str();
    return out;
}

int sign_two_radicals(const Integer& u, const Integer& v, const Natural& d1, const Integer& w,
                      const Natural& d2) {
    if (d1 == d2) return sign_one_radical(u, v + w, d1);
    if (w == 0 || d2 == 0) return sign_one_radical(u, v, d1);
    if (v == 0 || d1 == 0) return sign_one_radical(u, w, d2);
    // A = u + v*sqrt(d1), B = w*sqrt(d2). When A and B have opposite signs,
    // sign(A + B) = sign(A) * sign(A^2 - B^2).
    const int sa = sign_one_radical(u, v, d1);
    const int sb = sign_of(w);
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    const Integer rational = u * u + v * v * d1 - w * w * d2;
    const Integer radical = 2 * u * v;
    return sa * sign_one_radical(rational, radical, d1);
}

std::strong_ordering surd_cmp(const Surd& x, const Surd& y) {
    if (x.is_infinite() || y.is_infinite()) {
        if (x.is_infinite() && y.is_infinite()) return std::strong_ordering::equal;
        return x.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    // x - y = (p1 r2 - p2 r1 + q1 r2 sqrt(d1) - q2 r1 sqrt(d2)) / (r1 r2), r1 r2 > 0
    const Integer u = x.p() * y.r() - y.p() * x.r();
    const Integer v = x.q() * y.r();
    const Integer w = -(y.q() * x.r());
    return from_sign(sign_two_radicals(u, v, x.d(), w, y.d()));
}

Integer floor_surd(const Surd& x) {
    if (x.is_infinite()) throw std::domain_error("floor_surd: argument is +infinity");
    return floor_div(x.p() + isqrt(x.q() * x.q() * x.d()), x.r());
}

std::strong_ordering cmp_int_vs_sum_sqrt(const Natural& s, const Natural& k, const Natural& a) {
    require_natural(s, "s");
    require_at_least(k, 1, "k");
    require_at_least(a, 1, "a");
    // s > k(sqrt(a) + sqrt(a+1))  <=>  s^2 > k^2(2a+1) + 2k^2 sqrt(a^2+a)
    const Natural k2 = k * k;
    const Integer residual = s * s - k2 * (2 * a + 1);
    if (residual <= 0) return std::strong_ordering::less;
    const Integer lhs = residual * residual;
    const Integer rhs = 4 * k2 * k2 * (a * a + a);
    return from_sign(lhs.compare(rhs));
}

}  // namespace ratsq
