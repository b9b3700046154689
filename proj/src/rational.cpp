#include "cyclespace/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace cyclespace {

Rational::Rational(long long n) : v_(0) {
    // mpq_class has no long long constructor; go through a decimal string
    // to stay correct on platforms where long is 32-bit.
    v_ = mpq_class(std::to_string(n));
}

Rational::Rational(long num, long den) : v_(0) {
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    v_ = std::move(q);
}

Rational Rational::from_string(std::string_view s) {
    auto is_int = [](std::string_view t) {
        if (!t.empty() && t.front() == '-')
            t.remove_prefix(1);
        if (t.empty())
            return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    std::string_view num = s, den;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        if (!is_int(den) || den.front() == '-')
            throw std::invalid_argument("Rational: malformed denominator in '" + std::string(s) + "'");
    }
    if (!is_int(num))
        throw std::invalid_argument("Rational: malformed number '" + std::string(s) + "'");
    mpq_class q(std::string(s), 10);
    if (q.get_den() == 0)
        throw std::domain_error("Rational: zero denominator in '" + std::string(s) + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::to_string() const {
    return v_.get_str();
}

Rational Rational::abs() const {
    return Rational(mpq_class(::abs(v_)));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_));
}

Rational Rational::pow2(long e) {
    if (e < 0)
        throw std::domain_error("Rational::pow2: negative exponent");
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    mpq_class q(1, den);
    q.canonicalize();
    return Rational(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Rational scale(std::int64_t f, const Rational& r) {
    Rational m = Rational(static_cast<long long>(f < 0 ? -f : f));
    return m * r;
}

} // namespace cyclespace
