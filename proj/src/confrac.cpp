#include "ratsq/confrac.hpp"

#include <stdexcept>

namespace ratsq {

namespace mp = boost::multiprecision;

namespace {

// Guard for the continued-fraction walk. Distinct square roots differ within
// a few periods; hitting this means the inputs were equal or corrupt.
constexpr std::size_t kMaxCommonPrefix = 1'000'000;

std::strong_ordering from_compare(int c) {
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// Largest j >= 1 with holds(j), given holds(1). holds must be monotone
// (true then false) and eventually false.
template <typename Pred>
Natural last_true(Pred holds) {
    Natural lo = 1;
    Natural hi = 2;
    while (holds(hi)) {
        lo = hi;
        hi <<= 1;
    }
    while (hi - lo > 1) {
        Natural mid = (lo + hi) >> 1;
        if (holds(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

Fraction Fraction::reduced(const Natural& num, const Natural& den) {
    require_natural(num, "numerator");
    if (den <= 0) throw std::domain_error("fraction denominator must be positive");
    Natural g = mp::gcd(num, den);
    if (g == 0) g = 1;
    return Fraction{num / g, den / g};
}

std::strong_ordering cmp_fraction_sqrt(const Fraction& f, const Natural& d) {
    // num/den vs sqrt(d)  <=>  num^2 vs den^2 d, everything non-negative
    const Natural lhs = f.num * f.num;
    const Natural rhs = f.den * f.den * d;
    return from_compare(lhs.compare(rhs));
}

const Natural& CFExpansion::term(std::size_t j) const {
    if (j == 0) return a0;
    if (kind == Kind::finite) {
        if (j > body.size()) throw std::out_of_range("continued fraction index past the last term");
        return body[j - 1];
    }
    if (body.empty()) throw std::out_of_range("periodic expansion without a period");
    return body[(j - 1) % body.size()];
}

std::string CFExpansion::to_string() const {
    std::string out = "[" + a0.str();
    if (!body.empty()) {
        out += "; ";
        if (kind == Kind::periodic) out += "(";
        for (std::size_t i = 0; i < body.size(); ++i) {
            if (i) out += ", ";
            out += body[i].str();
        }
        if (kind == Kind::periodic) out += ")";
    }
    return out + "]";
}

SqrtCfStream::SqrtCfStream(const Natural& d) : d_(d) {
    require_at_least(d, 1, "radicand");
    a0_ = isqrt(d_);
    rational_ = a0_ * a0_ == d_;
    a_ = a0_;
}

std::optional<Natural> SqrtCfStream::next() {
    if (!started_) {
        started_ = true;
        return a0_;
    }
    if (rational_) return std::nullopt;
    m_ = den_ * a_ - m_;
    den_ = (d_ - m_ * m_) / den_;
    a_ = (a0_ + m_) / den_;
    return a_;
}

CFExpansion sqrt_cf(const Natural& d) {
    require_at_least(d, 1, "radicand");
    CFExpansion cf;
    cf.a0 = isqrt(d);
    if (cf.a0 * cf.a0 == d) {
        cf.kind = CFExpansion::Kind::finite;
        return cf;
    }
    cf.kind = CFExpansion::Kind::periodic;
    const Natural m1 = cf.a0;
    const Natural den1 = d - cf.a0 * cf.a0;
    Natural m = m1;
    Natural den = den1;
    Natural a = (cf.a0 + m) / den;
    cf.body.push_back(a);
    for (;;) {
        m = den * a - m;
        den = (d - m * m) / den;
        if (m == m1 && den == den1) break;
        a = (cf.a0 + m) / den;
        cf.body.push_back(a);
    }
    return cf;
}

Fraction evaluate_cf(std::span<const Natural> terms) {
    if (terms.empty()) throw std::invalid_argument("empty continued fraction");
    // p_j = a_j p_{j-1} + p_{j-2}, q_j = a_j q_{j-1} + q_{j-2}
    Natural p_prev = 1, q_prev = 0;
    Natural p = terms[0], q = 1;
    for (std::size_t j = 1; j < terms.size(); ++j) {
        Natural p_next = terms[j] * p + p_prev;
        Natural q_next = terms[j] * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
    }
    return Fraction{p, q};
}

Fraction convergent(const CFExpansion& cf, std::size_t j) {
    std::vector<Natural> terms;
    terms.reserve(j + 1);
    for (std::size_t i = 0; i <= j; ++i) terms.push_back(cf.term(i));
    return evaluate_cf(terms);
}

Fraction first_rational_cf_rule(const QuadraticEndpoint& x, const QuadraticEndpoint& y) {
    SqrtCfStream xs(x.radicand);
    SqrtCfStream ys(y.radicand);
    if (xs.rational() || ys.rational())
        throw std::domain_error("continued-fraction rule needs irrational endpoints");
    if (x.radicand == y.radicand) throw std::domain_error("empty interval");
    std::vector<Natural> prefix;
    for (std::size_t k = 0; k < kMaxCommonPrefix; ++k) {
        Natural ak = *xs.next();
        Natural bk = *ys.next();
        if (ak != bk) {
            prefix.push_back(mp::min(ak, bk) + 1);
            return evaluate_cf(prefix);
        }
        prefix.push_back(std::move(ak));
    }
    throw std::runtime_error("continued fractions agree on too many terms");
}

Fraction first_rational_stern_brocot(const QuadraticEndpoint& x, const QuadraticEndpoint& y) {
    const Natural& dx = x.radicand;
    const Natural& dy = y.radicand;
    require_natural(dx, "left radicand");
    if (dx >= dy) throw std::domain_error("empty interval");

    auto at_or_left_of_x = [&](const Natural& num, const Natural& den) {
        return cmp_fraction_sqrt(Fraction{num, den}, dx) <= 0;
    };
    auto at_or_right_of_y = [&](const Natural& num, const Natural& den) {
        return cmp_fraction_sqrt(Fraction{num, den}, dy) >= 0;
    };

    // Left bound 0/1, right bound 1/0.
    Natural pl = 0, ql = 1, pr = 1, qr = 0;
    for (;;) {
        const Natural pm = pl + pr;
        const Natural qm = ql + qr;
        if (at_or_left_of_x(pm, qm)) {
            const Natural j = last_true(
                [&](const Natural& t) { return at_or_left_of_x(pl + t * pr, ql + t * qr); });
            pl += j * pr;
            ql += j * qr;
        } else if (at_or_right_of_y(pm, qm)) {
            const Natural j = last_true(
                [&](const Natural& t) { return at_or_right_of_y(t * pl + pr, t * ql + qr); });
            pr += j * pl;
            qr += j * ql;
        } else {
            return Fraction{pm, qm};
        }
    }
}

Fraction first_rational_between(const QuadraticEndpoint& x, const QuadraticEndpoint& y) {
    require_natural(x.radicand, "left radicand");
    if (x.radicand >= y.radicand) throw std::domain_error("empty interval");
    const bool x_rational = x.radicand == 0 || is_perfect_square(x.radicand).has_value();
    const bool y_rational = is_perfect_square(y.radicand).has_value();
    if (x_rational || y_rational) return first_rational_stern_brocot(x, y);
    return first_rational_cf_rule(x, y);
}

}  // namespace ratsq
