#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace schurkit {

// Exact rational number.
//
// Values whose reduced numerator and denominator fit in a signed 64-bit word
// are stored inline and handled with 128-bit intermediates; anything larger is
// promoted to a GMP rational and demoted again as soon as it fits.  Either way
// the value is always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {} // NOLINT: implicit by design of the arithmetic
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& q);

    // Accepts "p", "-p", "p/q".
    static Rational parse(std::string_view text);

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    int sign() const noexcept;
    bool is_integer() const noexcept;
    bool is_big() const noexcept { return big_ != nullptr; }

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    // Throws std::domain_error unless the value is an integer that fits.
    std::int64_t to_int64() const;
    double to_double() const;
    std::string str() const;

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inverse() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational from_wide(__int128 num, __int128 den);
    void assign_mpq(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace schurkit
