#include "gwi/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace gwi {

Rational::Rational(long num, long den) : q_(num, den == 0 ? 1 : den)
{
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q)
{
    if (q_.get_den() == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto parse_int = [](std::string_view s) {
        if (s.empty()) {
            throw std::invalid_argument("Rational::parse: empty integer");
        }
        std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
        if (start == s.size()) {
            throw std::invalid_argument("Rational::parse: bad integer '" + std::string(s) + "'");
        }
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw std::invalid_argument("Rational::parse: bad integer '" + std::string(s) + "'");
            }
        }
        std::string str(s.front() == '+' ? s.substr(1) : s);
        return mpz_class(str, 10);
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    const mpz_class num = parse_int(trim(text.substr(0, slash)));
    const mpz_class den = parse_int(trim(text.substr(slash + 1)));
    if (den == 0) {
        throw std::invalid_argument("Rational::parse: zero denominator");
    }
    return Rational(num, den);
}

std::string Rational::str() const
{
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::abs() const
{
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::reciprocal() const
{
    if (is_zero()) {
        throw std::domain_error("Rational: reciprocal of zero");
    }
    Rational r;
    r.q_ = 1 / q_;
    r.q_.canonicalize();
    return r;
}

Rational& Rational::operator+=(const Rational& o)
{
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational operator-(const Rational& a)
{
    Rational r;
    r.q_ = -a.q_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

}  // namespace gwi
