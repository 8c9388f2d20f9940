#ifndef GWI_RATIONAL_HPP
#define GWI_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gwi {

/// Arbitrary-precision rational number, always held in lowest terms with a
/// positive denominator. Thin value wrapper over mpq_class so that arithmetic
/// returns concrete values rather than GMP expression templates (Eigen needs
/// that to use it as a scalar).
class Rational {
public:
    Rational() = default;

    template <std::signed_integral I>
    Rational(I n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

    template <std::unsigned_integral I>
    Rational(I n) : q_(static_cast<unsigned long>(n)) {}  // NOLINT(google-explicit-constructor)

    Rational(long num, long den);
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q);

    /// Parses "num/den" or a bare integer "num". Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    /// Serialization contract: always "num/den", e.g. "3/1", "-1/2".
    [[nodiscard]] std::string str() const;

    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] double to_double() const { return q_.get_d(); }
    [[nodiscard]] Rational abs() const;
    [[nodiscard]] Rational reciprocal() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace gwi

namespace Eigen {

template <>
struct NumTraits<gwi::Rational> : GenericNumTraits<gwi::Rational> {
    using Real = gwi::Rational;
    using NonInteger = gwi::Rational;
    using Nested = gwi::Rational;
    using Literal = gwi::Rational;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 20,
        MulCost = 40
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    static inline int max_digits10() { return 0; }
};

}  // namespace Eigen

#endif  // GWI_RATIONAL_HPP
