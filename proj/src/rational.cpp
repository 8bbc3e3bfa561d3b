#include "schurkit/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace schurkit {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? u128(-(v + 1)) + 1 : u128(v); }

u128 gcd128(u128 a, u128 b) {
    if ((a >> 64) == 0 && (b >> 64) == 0)
        return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(i128 v) { return v <= i128(kMax) && v >= -i128(kMax); }

mpz_class to_mpz(i128 v) {
    const bool neg = v < 0;
    const u128 mag = uabs(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    mpz_class out = (hi << 64) + lo;
    return neg ? mpz_class(-out) : out;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& q) { assign_mpq(q); }

void Rational::assign_mpq(mpq_class q) {
    q.canonicalize();
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() &&
        q.get_num() != std::numeric_limits<long>::min()) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_shared<const mpq_class>(std::move(q));
    }
}

Rational Rational::from_wide(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0)
        return Rational();
    const u128 g = gcd128(uabs(num), u128(den));
    if (g > 1) {
        num /= i128(g);
        den /= i128(g);
    }
    Rational out;
    if (fits(num) && fits(den)) {
        out.num_ = static_cast<std::int64_t>(num);
        out.den_ = static_cast<std::int64_t>(den);
        return out;
    }
    mpq_class q;
    q.get_num() = to_mpz(num);
    q.get_den() = to_mpz(den);
    out.assign_mpq(std::move(q));
    return out;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty())
        throw std::invalid_argument("Rational::parse: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
    if (q.get_den() == 0)
        throw std::domain_error("Rational::parse: zero denominator");
    return Rational(q);
}

int Rational::sign() const noexcept {
    if (big_)
        return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const noexcept {
    if (big_)
        return big_->get_den() == 1;
    return den_ == 1;
}

mpq_class Rational::to_mpq() const {
    if (big_)
        return *big_;
    mpq_class q;
    q.get_num() = static_cast<long>(num_);
    q.get_den() = static_cast<long>(den_);
    return q;
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_)); }
mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_)); }

std::int64_t Rational::to_int64() const {
    if (big_ || den_ != 1)
        throw std::domain_error("Rational::to_int64: " + str() + " is not a 64-bit integer");
    return num_;
}

double Rational::to_double() const {
    if (big_)
        return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (big_)
        return big_->get_str();
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::inverse() const {
    if (is_zero())
        throw std::domain_error("Rational: division by zero");
    if (big_)
        return Rational(mpq_class(1 / *big_));
    Rational out;
    out.num_ = num_ < 0 ? -den_ : den_;
    out.den_ = num_ < 0 ? -num_ : num_;
    return out;
}

Rational Rational::operator-() const {
    if (big_)
        return Rational(mpq_class(-*big_));
    if (num_ == std::numeric_limits<std::int64_t>::min())
        return Rational(mpq_class(-to_mpq()));
    Rational out = *this;
    out.num_ = -num_;
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t sum;
            if (!__builtin_add_overflow(num_, rhs.num_, &sum) && sum != std::numeric_limits<std::int64_t>::min()) {
                num_ = sum;
                return *this;
            }
        }
        *this = from_wide(i128(num_) * rhs.den_ + i128(rhs.num_) * den_, i128(den_) * rhs.den_);
        return *this;
    }
    assign_mpq(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t prod;
            if (!__builtin_mul_overflow(num_, rhs.num_, &prod) && prod != std::numeric_limits<std::int64_t>::min()) {
                num_ = prod;
                return *this;
            }
        }
        *this = from_wide(i128(num_) * rhs.num_, i128(den_) * rhs.den_);
        return *this;
    }
    assign_mpq(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_)
        return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_)
        return *a.big_ == *b.big_;
    // Canonical form guarantees a big value never equals a small one.
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        const i128 lhs = i128(a.num_) * b.den_;
        const i128 rhs = i128(b.num_) * a.den_;
        return lhs <=> rhs;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

} // namespace schurkit
