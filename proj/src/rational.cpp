#include "symquot/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "symquot/error.hpp"

namespace symquot {

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// INT64_MIN is excluded so negation never overflows on the inline path.
bool fits(i128 v) { return v >= -static_cast<i128>(kMax) && v <= kMax; }

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a),
                  static_cast<std::uint64_t>(b < 0 ? -b : b));
}

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

bool mpz_fits(const mpz_class& z) {
  if (!mpz_fits_slong_p(z.get_mpz_t())) return false;
  return mpz_get_si(z.get_mpz_t()) != std::numeric_limits<long>::min();
}

}  // namespace

Rational::Rational(std::int64_t value) : num_(value), den_(1) {
  if (value == std::numeric_limits<std::int64_t>::min()) *this = from_mpq(mpq_class(to_mpz(value)));
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  if (numerator == std::numeric_limits<std::int64_t>::min() ||
      denominator == std::numeric_limits<std::int64_t>::min()) {
    mpq_class q(to_mpz(numerator), to_mpz(denominator));
    q.canonicalize();
    *this = from_mpq(std::move(q));
    return;
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  auto g = static_cast<std::int64_t>(gcd64(numerator, denominator));
  if (g == 0) g = 1;
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational::Rational(const mpq_class& value) {
  mpq_class q(value);
  q.canonicalize();
  *this = from_mpq(std::move(q));
}

Rational Rational::from_mpq(mpq_class value) {
  Rational r;
  if (mpz_fits(value.get_num()) && mpz_fits(value.get_den())) {
    r.num_ = mpz_get_si(value.get_num_mpz_t());
    r.den_ = mpz_get_si(value.get_den_mpz_t());
  } else {
    r.big_ = std::make_shared<const mpq_class>(std::move(value));
  }
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  auto digits = [&](std::string& out) {
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') out += text[i++];
    return i > start;
  };
  std::string num;
  std::string den = "1";
  if (!digits(num)) throw InputError("malformed rational '" + std::string(text) + "'");
  if (i < text.size() && text[i] == '/') {
    ++i;
    den.clear();
    if (!digits(den)) throw InputError("malformed rational '" + std::string(text) + "'");
  }
  if (i != text.size()) throw InputError("malformed rational '" + std::string(text) + "'");
  mpz_class n(num);
  mpz_class d(den);
  if (d == 0) throw InputError("rational with zero denominator");
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return from_mpq(std::move(q));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

bool Rational::to_int64(std::int64_t& out) const {
  if (big_ || den_ != 1) return false;
  out = num_;
  return true;
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const {
  if (big_) {
    std::hash<std::string> h;
    return h(big_->get_str());
  }
  std::uint64_t x = static_cast<std::uint64_t>(num_) * 0x9E3779B97F4A7C15ULL;
  x ^= static_cast<std::uint64_t>(den_) + 0x632BE59BD9B4E019ULL + (x << 6) + (x >> 2);
  return static_cast<std::size_t>(x);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  if (big_) return from_mpq(1 / *big_);
  Rational r;
  r.num_ = num_ < 0 ? -den_ : den_;
  r.den_ = num_ < 0 ? -num_ : num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 n = static_cast<i128>(a.num_) + b.num_;
      if (fits(n)) return Rational(static_cast<std::int64_t>(n));
    } else {
      i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
      i128 d = static_cast<i128>(a.den_) * b.den_;
      u128 g = gcd128(abs128(n), static_cast<u128>(d));
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
      if (fits(n) && fits(d)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
      }
    }
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    auto g1 = static_cast<std::int64_t>(gcd64(a.num_, b.den_));
    auto g2 = static_cast<std::int64_t>(gcd64(b.num_, a.den_));
    i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    if (fits(n) && fits(d)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace symquot
