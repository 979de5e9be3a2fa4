#include "ratsq/confrac.hpp"
#include "ratsq/sigmacore.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <doctest.h>

using namespace ratsq;

namespace {

using Decimal = boost::multiprecision::cpp_dec_float_50;

// Least s with a square strictly inside (s^2 a, s^2 (a+1)), from s = 1.
Natural brute_sigma(const Natural& a) {
    for (Natural s = 1;; ++s)
        if (tau_brute(a, s) > 0) return s;
}

}  // namespace

TEST_CASE("decompose") {
    const auto d8 = decompose(8);
    CHECK(d8.n == 2);
    CHECK(d8.b == 4);
    CHECK(d8.m == 3);
    CHECK(d8.c == 1);
    const auto d1 = decompose(1);
    CHECK(d1.n == 1);
    CHECK(d1.b == 0);
    CHECK(d1.m == 2);
    CHECK(d1.c == 3);
    const auto d12 = decompose(12);
    CHECK(d12.n == 3);
    CHECK(d12.b == 3);
    CHECK(d12.m == 4);
    CHECK(d12.c == 4);
    for (long a = 1; a <= 3000; ++a) {
        const auto d = decompose(a);
        REQUIRE(d.n * d.n + d.b == a);
        REQUIRE(d.m * d.m - d.c == a);
        REQUIRE(d.b <= 2 * d.n);
        REQUIRE(d.c >= 1);
        REQUIRE(d.c <= 2 * d.m - 1);
    }
    CHECK_THROWS_AS(decompose(0), std::domain_error);
}

TEST_CASE("tau examples") {
    CHECK(tau(8, 2) == 0);
    CHECK(tau(8, 6) == 1);
    CHECK(tau(3, 10) == 2);
    CHECK(tau_brute(8, 5) == 0);
    CHECK(tau_brute(12, 2) == 1);
    CHECK(tau_brute(991, 27) == 1);
    CHECK(t_set(8, 6) == std::vector<Natural>{17});
    CHECK(t_set(15, 8) == std::vector<Natural>{31});
    CHECK(t_set(2, 10) == std::vector<Natural>{15, 16, 17});
    CHECK(t_set(991, 27) == std::vector<Natural>{850});
    CHECK(t_set(8, 2).empty());
    CHECK_THROWS_AS(tau(0, 3), std::domain_error);
    CHECK_THROWS_AS(tau(3, 0), std::domain_error);
}

TEST_CASE("tau agrees with the direct count and moves in unit steps") {
    for (long a = 1; a <= 200; ++a) {
        Natural prev = 0;
        for (long s = 1; s <= 300; ++s) {
            const Natural t = tau(a, s);
            REQUIRE_MESSAGE(t == tau_brute(a, s), "a=" << a << " s=" << s);
            REQUIRE(t_set(a, s).size() == static_cast<std::size_t>(t));
            if (s > 1) REQUIRE((t >= prev ? t - prev : prev - t) <= 1);
            prev = t;
        }
    }
}

TEST_CASE("tau on the wide path matches the 128-bit path") {
    // s^2 (a+1) straddles 2^127 as s grows
    const Natural a = (Natural(1) << 60) + 12345;
    for (Natural s = (Natural(1) << 33) - 3; s <= (Natural(1) << 33) + 3; ++s) {
        const Natural lo = isqrt(s * s * a), hi = isqrt(s * s * (a + 1));
        CHECK(tau(a, s) == hi - lo);
    }
    const Natural big = boost::multiprecision::pow(Natural(10), 30) + 7;
    CHECK(tau(big, 3) == tau_brute(big, 3));
}

TEST_CASE("tau is at least k once s exceeds k(sqrt a + sqrt(a+1))") {
    for (long a = 1; a <= 100; ++a)
        for (long k = 1; k <= 5; ++k)
            for (long s = 1; s <= 120; ++s)
                if (cmp_int_vs_sum_sqrt(s, k, a) == std::strong_ordering::greater)
                    REQUIRE(tau(a, s) >= k);
}

TEST_CASE("sigma examples") {
    CHECK(sigma(8) == 6);
    CHECK(sigma(991) == 27);
    CHECK(sigma(19) == 5);
    CHECK(sigma(8, SigmaStrategy::cf) == 6);
    CHECK(sigma(991, SigmaStrategy::cf) == 27);
    CHECK(sigma_scan(8, true) == 6);
    CHECK_THROWS_AS(sigma(0), std::domain_error);
}

TEST_CASE("sigma matches brute force and both strategies agree") {
    for (long a = 1; a <= 400; ++a) REQUIRE(sigma(a) == brute_sigma(a));
    for (long a = 1; a <= 5000; ++a) {
        const Natural s = sigma(a);
        REQUIRE_MESSAGE(s == sigma(a, SigmaStrategy::cf), "a=" << a);
        REQUIRE(s == sigma_scan(a, true));
        REQUIRE(tau(a, s) == 1);
    }
}

TEST_CASE("first rational denominator is sigma") {
    for (long a = 1; a <= 2000; ++a) {
        const Fraction f = first_rational_between({a}, {a + 1});
        REQUIRE(f.den == sigma(a));
        REQUIRE(t_set(a, f.den) == std::vector<Natural>{f.num});
    }
}

TEST_CASE("bound family examples") {
    CHECK(sigma_l(8) == Surd::integer(1));
    CHECK(sigma_r(8) == Surd(3, 1, 8, 1));
    CHECK(sigma_r(12) == Surd(4, 1, 12, 4));
    CHECK(sigma_k(8, 1) == 6);
    CHECK(sigma_k(19, 1) == 3);
    CHECK(sigma_k(19, 2) == 5);
    CHECK(sigma_k(25, 1) == 11);
    CHECK(sigma_lower(8) == 6);
    CHECK(sigma_upper(8) == 6);
    CHECK(sigma_lower(25) == 11);
    CHECK(sigma_upper(25) == 11);
    CHECK(sigma_lower(19) == 3);
    CHECK(sigma_upper(19) == 9);
    CHECK_THROWS_AS(sigma_k(8, 0), std::domain_error);
}

TEST_CASE("sigma_k equals the floor of the exact surds") {
    for (long a = 1; a <= 400; ++a)
        for (long k = 1; k <= 12; ++k) {
            const Integer l = floor_surd(sigma_l(a).scaled(k));
            const Integer r = floor_surd(sigma_r(a).scaled(k));
            REQUIRE(sigma_k(a, k) == std::max(l, r) + 1);
        }
}

TEST_CASE("upper bound is the ceiling of sqrt a + sqrt(a+1)") {
    for (long a = 1; a <= 10000; ++a) {
        const Decimal v = boost::multiprecision::sqrt(Decimal(a)) +
                          boost::multiprecision::sqrt(Decimal(a + 1));
        REQUIRE(sigma_upper(a) == Natural(boost::multiprecision::ceil(v).convert_to<long>()));
    }
}

TEST_CASE("sigma lies between its bounds") {
    for (long a = 1; a <= 10000; ++a) {
        const Natural s = sigma(a);
        REQUIRE(sigma_lower(a) <= s);
        REQUIRE(s <= sigma_upper(a));
    }
}

TEST_CASE("square-adjacent families") {
    for (long n = 1; n <= 1000; ++n) {
        const Natural nn = Natural(n) * n;
        REQUIRE(sigma(nn + n) == 2);
        REQUIRE(t_set(nn + n, 2) == std::vector<Natural>{2 * n + 1});
        REQUIRE(sigma(nn) == 2 * n + 1);
        REQUIRE(t_set(nn, 2 * n + 1) == std::vector<Natural>{2 * nn + n + 1});
        if (n >= 2) {
            REQUIRE(sigma(nn - 1) == 2 * n);
            REQUIRE(t_set(nn - 1, 2 * n) == std::vector<Natural>{2 * nn - 1});
        }
    }
}

TEST_CASE("square-adjacent families far beyond 64 bits") {
    const Natural n = boost::multiprecision::pow(Natural(10), 20) + 3;
    const Natural nn = n * n;
    for (auto strategy : {SigmaStrategy::scan, SigmaStrategy::cf}) {
        CHECK(sigma(nn + n, strategy) == 2);
        CHECK(sigma(nn, strategy) == 2 * n + 1);
        CHECK(sigma(nn - 1, strategy) == 2 * n);
    }
    CHECK(t_set(nn, 2 * n + 1) == std::vector<Natural>{2 * nn + n + 1});
    CHECK(t_set(nn - 1, 2 * n) == std::vector<Natural>{2 * nn - 1});
}

TEST_CASE("on-bound criterion examples") {
    CHECK(on_bound_criterion(8));
    CHECK_FALSE(on_bound_criterion(19));
    CHECK(on_bound_criterion(12));
    CHECK_THROWS_AS(on_bound_criterion(1), std::domain_error);

    CHECK(sigma_r_right_probe(8) == Surd::infinity());
    CHECK(sigma_l_left_probe(9) == Surd::infinity());
    CHECK(sigma_l_left_probe(12) == Surd(3, 1, 12, 3));
    CHECK(sigma_r_right_probe(12) == Surd(4, 1, 13, 3));
}

TEST_CASE("re-decomposing the neighbour breaks the criterion at a = 8") {
    // sigma(8) == sigma_1(8), but with 9 = 3^2 in its own frame neither
    // inequality holds. The fixed-frame probes are what make a = 8 on-bound.
    CHECK(sigma(8) == sigma_lower(8));
    const bool naive_left = floor_surd(sigma_l(8)) < floor_surd(sigma_l(7));
    const bool naive_right = floor_surd(sigma_r(8)) < floor_surd(sigma_r(9));
    CHECK_FALSE(naive_left);
    CHECK_FALSE(naive_right);
    CHECK(on_bound_criterion(8));
}

TEST_CASE("on-bound criterion is equivalent to sigma == sigma_1") {
    for (long a = 2; a <= 5000; ++a)
        REQUIRE_MESSAGE(on_bound_criterion(a) == (sigma(a) == sigma_lower(a)), "a=" << a);
}

TEST_CASE("min_k") {
    CHECK(min_k(8) == 1);
    CHECK(min_k(19) == 2);
    CHECK(min_k(24) == 1);
    CHECK(min_k(991) == min_k(991, 27));
    for (long a = 1; a <= 3000; ++a) {
        const Natural s = sigma(a);
        const Natural k = min_k(a, s);
        REQUIRE(sigma_k(a, k) == s);
        for (Natural j = 1; j < k; ++j) REQUIRE(sigma_k(a, j) != s);
    }
    CHECK_THROWS_AS(min_k(19, 4), MinKNotFound);
}

TEST_CASE("zero window examples") {
    const auto w8 = zero_windows(8, 4);
    auto find = [&](long k, Crowding side) -> const ZeroWindow* {
        for (const auto& w : w8)
            if (w.k == k && w.side == side) return &w;
        return nullptr;
    };
    const ZeroWindow* right0 = find(0, Crowding::right);
    REQUIRE(right0 != nullptr);
    CHECK(right0->lo == Surd::integer(0));
    CHECK(right0->hi == Surd(3, 1, 8, 1));
    for (long s = 1; s <= 5; ++s) CHECK(right0->contains(s));
    CHECK_FALSE(right0->contains(6));

    const ZeroWindow* left4 = find(4, Crowding::left);
    REQUIRE(left4 != nullptr);
    CHECK(left4->lo == Surd(2, 1, 8, 4).scaled(4));
    CHECK(left4->hi == Surd::integer(5));
    CHECK(left4->contains(5));
    CHECK_FALSE(left4->contains(4));

    // c == 1: no right window beyond k = 0
    CHECK(find(1, Crowding::right) == nullptr);

    const auto w9 = zero_windows(9, 2);
    bool saw_left0 = false;
    for (const auto& w : w9) {
        if (w.side != Crowding::left) continue;
        CHECK(w.k == 0);  // b == 0 pushes k >= 1 to infinity
        CHECK(w.lo == Surd::integer(0));
        CHECK(w.hi == Surd(3, 1, 10, 1));
        saw_left0 = true;
    }
    CHECK(saw_left0);
}

TEST_CASE("zero windows cover exactly the empty denominators") {
    for (long a = 1; a <= 100; ++a) {
        const auto windows = zero_windows(a, 200);
        for (long s = 1; s <= 200; ++s) {
            bool covered = false;
            for (const auto& w : windows)
                if (w.k <= s && w.contains(s)) covered = true;
            REQUIRE_MESSAGE(covered == (tau(a, s) == 0), "a=" << a << " s=" << s);
        }
        for (const auto& w : windows) REQUIRE(w.lo <= w.hi);
    }
}

TEST_CASE("tau never decreases next to squares") {
    for (long n = 2; n <= 50; ++n)
        for (long a : {n * n, n * n - 1})
            for (long s = 1; s < 200; ++s) REQUIRE(tau(a, s + 1) >= tau(a, s));
}
