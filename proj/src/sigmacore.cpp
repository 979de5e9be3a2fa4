#include "ratsq/sigmacore.hpp"

#include "ratsq/confrac.hpp"

#include <optional>

namespace ratsq {

namespace {

// isqrt(x * y) on the 128-bit path, or nothing if x * y >= 2^127.
std::optional<std::uint64_t> isqrt_product(std::uint64_t x, std::uint64_t y) {
    if (auto prod = checked_mul_127(x, y)) return isqrt_u128(*prod);
    return std::nullopt;
}

std::optional<std::uint64_t> tau_u64(std::uint64_t a, std::uint64_t s, bool next_is_square) {
    const u128 s2 = static_cast<u128>(s) * s;
    const auto hi = checked_mul_127(s2, static_cast<u128>(a) + 1);
    if (!hi) return std::nullopt;
    const std::uint64_t r_hi = isqrt_u128(*hi);
    const std::uint64_t r_lo = isqrt_u128(s2 * a);
    return r_hi - r_lo - (next_is_square ? 1 : 0);
}

Natural tau_big(const Natural& a, const Natural& s, bool next_is_square) {
    const Natural s2 = s * s;
    return isqrt(s2 * (a + 1)) - isqrt(s2 * a) - (next_is_square ? 1 : 0);
}

// floor(k (num_base + sqrt(rad)) / den), den > 0
Natural scaled_floor(const Natural& k, const Natural& num_base, const Natural& rad,
                     const Natural& den) {
    const auto k64 = to_u64(k);
    const auto b64 = to_u64(num_base);
    const auto r64 = to_u64(rad);
    const auto d64 = to_u64(den);
    if (k64 && b64 && r64 && d64 && *k64 < (std::uint64_t{1} << 31) &&
        *b64 < (std::uint64_t{1} << 32)) {
        if (auto root = isqrt_product(*k64 * *k64, *r64)) {
            const u128 num = static_cast<u128>(*k64) * *b64 + *root;
            return Natural(static_cast<std::uint64_t>(num / *d64));
        }
    }
    return (k * num_base + isqrt(k * k * rad)) / den;
}

Surd window_lower(const Natural& k, const Natural& base, const Natural& rad, const Natural& den) {
    if (den == 0) return k == 0 ? Surd::integer(0) : Surd::infinity();
    return Surd(k * base, k, rad, den);
}

}  // namespace

Decomposition decompose(const Natural& a) {
    require_at_least(a, 1, "a");
    Decomposition f;
    f.a = a;
    f.n = isqrt(a);
    f.b = a - f.n * f.n;
    f.m = f.n + 1;
    f.c = f.m * f.m - a;
    return f;
}

Natural tau(const Natural& a, const Natural& s) {
    require_at_least(a, 1, "a");
    require_at_least(s, 1, "s");
    const auto a64 = to_u64(a);
    const auto s64 = to_u64(s);
    if (a64 && s64 && *a64 < (std::uint64_t{1} << 63)) {
        const bool next_square = is_square_u64(*a64 + 1);
        if (auto t = tau_u64(*a64, *s64, next_square)) return Natural(*t);
        return tau_big(a, s, next_square);
    }
    return tau_big(a, s, is_perfect_square(a + 1).has_value());
}

Natural tau_brute(const Natural& a, const Natural& s) {
    require_at_least(a, 1, "a");
    require_at_least(s, 1, "s");
    const Natural lo = s * s * a;
    const Natural hi = s * s * (a + 1);
    Natural count = 0;
    for (Natural t = isqrt(lo) + 1;; ++t) {
        const Natural t2 = t * t;
        if (!(t2 < hi)) break;
        if (lo < t2) ++count;
    }
    return count;
}

std::vector<Natural> t_set(const Natural& a, const Natural& s) {
    require_at_least(a, 1, "a");
    require_at_least(s, 1, "s");
    const Natural s2 = s * s;
    const Natural first = isqrt(s2 * a) + 1;   // smallest t with t^2 > s^2 a
    const Natural last = isqrt(s2 * (a + 1) - 1);  // largest t with t^2 < s^2 (a+1)
    std::vector<Natural> out;
    for (Natural t = first; t <= last; ++t) out.push_back(t);
    return out;
}

Natural sigma_scan(const Natural& a, bool from_two) {
    require_at_least(a, 1, "a");
    const Natural upper = sigma_upper(a);
    Natural s = from_two ? Natural(2) : boost::multiprecision::max(Natural(2), sigma_lower(a));

    const auto a64 = to_u64(a);
    const auto u64 = to_u64(upper);
    if (a64 && u64 && *a64 < (std::uint64_t{1} << 62)) {
        const bool next_square = is_square_u64(*a64 + 1);
        for (auto s64 = static_cast<std::uint64_t>(s); s64 <= *u64; ++s64) {
            auto t = tau_u64(*a64, s64, next_square);
            if (!t) break;  // past the 128-bit range; finish on the big path
            if (*t > 0) return Natural(s64);
            s = s64 + 1;
        }
    }
    for (; s <= upper; ++s) {
        if (tau(a, s) > 0) return s;
    }
    throw std::logic_error("sigma scan passed the upper bound for a = " + a.str());
}

Natural sigma(const Natural& a, SigmaStrategy strategy) {
    require_at_least(a, 1, "a");
    if (strategy == SigmaStrategy::cf)
        return first_rational_between(QuadraticEndpoint{a}, QuadraticEndpoint{a + 1}).den;
    return sigma_scan(a);
}

Surd sigma_l(const Natural& a) {
    const auto f = decompose(a);
    return Surd(f.n, 1, a + 1, f.b + 1);
}

Surd sigma_r(const Natural& a) {
    const auto f = decompose(a);
    return Surd(f.m, 1, a, f.c);
}

Surd sigma_l_left_probe(const Natural& a) {
    const auto f = decompose(a);
    if (f.b == 0) return Surd::infinity();
    return Surd(f.n, 1, a, f.b);
}

Surd sigma_r_right_probe(const Natural& a) {
    const auto f = decompose(a);
    if (f.c == 1) return Surd::infinity();
    return Surd(f.m, 1, a + 1, f.c - 1);
}

Natural sigma_k(const Natural& a, const Natural& k) {
    require_at_least(k, 1, "k");
    const auto f = decompose(a);
    const Natural left = scaled_floor(k, f.n, a + 1, f.b + 1);
    const Natural right = scaled_floor(k, f.m, a, f.c);
    return boost::multiprecision::max(left, right) + 1;
}

Natural sigma_lower(const Natural& a) { return sigma_k(a, 1); }

Natural sigma_upper(const Natural& a) {
    require_at_least(a, 1, "a");
    // floor(sqrt a + sqrt(a+1)) = isqrt(4a+2); the sum is irrational for a >= 1
    return isqrt(4 * a + 2) + 1;
}

bool on_bound_criterion(const Natural& a) {
    require_at_least(a, 2, "a");
    const Surd left_probe = sigma_l_left_probe(a);
    const bool left = left_probe.is_infinite() || floor_surd(sigma_l(a)) < floor_surd(left_probe);
    if (left) return true;
    const Surd right_probe = sigma_r_right_probe(a);
    return right_probe.is_infinite() || floor_surd(sigma_r(a)) < floor_surd(right_probe);
}

Natural min_k(const Natural& a) { return min_k(a, sigma(a)); }

Natural min_k(const Natural& a, const Natural& sigma_value) {
    // sigma_k is non-decreasing in k and sigma_k >= k + 1
    for (Natural k = 1; k <= sigma_value; ++k) {
        const Natural v = sigma_k(a, k);
        if (v == sigma_value) return k;
        if (v > sigma_value) break;
    }
    throw MinKNotFound("no k with sigma_k(a) = sigma(a) for a = " + a.str());
}

bool ZeroWindow::contains(const Natural& s) const {
    const Surd point = Surd::integer(s);
    return lo <= point && point <= hi;
}

std::vector<ZeroWindow> zero_windows(const Natural& a, const Natural& k_max) {
    require_natural(k_max, "k_max");
    const auto f = decompose(a);
    std::vector<ZeroWindow> out;
    for (Natural k = 0; k <= k_max; ++k) {
        ZeroWindow left{k, window_lower(k, f.n, a, f.b), Surd(f.n, 1, a + 1, f.b + 1).scaled(k + 1),
                        Crowding::left};
        if (left.lo <= left.hi) out.push_back(std::move(left));
        ZeroWindow right{k, window_lower(k, f.m, a + 1, f.c - 1), Surd(f.m, 1, a, f.c).scaled(k + 1),
                         Crowding::right};
        if (right.lo <= right.hi) out.push_back(std::move(right));
    }
    return out;
}

}  // namespace ratsq
