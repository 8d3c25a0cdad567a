#include "symquot/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>

#include "symquot/error.hpp"

namespace symquot {

namespace {

using IntPoly = std::vector<std::int64_t>;

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    std::int64_t c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return quot;
}

std::unique_ptr<CyclotomicField> build_field(int m, const std::map<int, IntPoly>& known) {
  IntPoly poly(static_cast<std::size_t>(m) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) poly = divide_monic(poly, known.at(d));
  }
  auto field = std::make_unique<CyclotomicField>();
  field->conductor = m;
  field->degree = static_cast<int>(poly.size()) - 1;
  field->modulus = poly;
  const auto phi = static_cast<std::size_t>(field->degree);
  IntPoly cur(phi, 0);
  cur[0] = 1;
  for (int j = 0; j < m; ++j) {
    field->powers.push_back(cur);
    // multiply by zeta: shift up and fold the overflow term through Phi_m
    std::int64_t top = cur[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < phi; ++i) cur[i] -= top * poly[i];
    }
  }
  return field;
}

struct FieldRegistry {
  std::mutex mutex;
  std::map<int, std::unique_ptr<CyclotomicField>> fields;
  std::map<int, IntPoly> polys;

  const CyclotomicField& get(int m) {
    std::lock_guard lock(mutex);
    if (auto it = fields.find(m); it != fields.end()) return *it->second;
    for (int d = 1; d <= m; ++d) {
      if (m % d != 0 || fields.count(d)) continue;
      fields[d] = build_field(d, polys);
      polys[d] = fields[d]->modulus;
    }
    return *fields.at(m);
  }
};

FieldRegistry& registry() {
  static FieldRegistry r;
  return r;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Solves A x = b over Q by Gauss-Jordan; A is rows x cols, row-major.
std::optional<std::vector<Rational>> solve_rational(std::vector<Rational> a, std::size_t rows,
                                                    std::size_t cols, std::vector<Rational> b) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c].is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[p * cols + k], a[r * cols + k]);
      std::swap(b[p], b[r]);
    }
    Rational inv = a[r * cols + c].inverse();
    for (std::size_t k = c; k < cols; ++k) a[r * cols + k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i * cols + c].is_zero()) continue;
      Rational f = a[i * cols + c];
      for (std::size_t k = c; k < cols; ++k) a[i * cols + k] -= f * a[r * cols + k];
      b[i] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
  return x;
}

}  // namespace

const CyclotomicField& cyclotomic_field(int conductor) {
  if (conductor < 1 || conductor > kMaxConductor) {
    throw InputError("conductor " + std::to_string(conductor) + " out of range [1, " +
                     std::to_string(kMaxConductor) + "]");
  }
  return registry().get(conductor);
}

int lcm_conductor(int a, int b) { return std::lcm(a, b); }

Cyclotomic::Cyclotomic(const Rational& value, int conductor)
    : field_(&cyclotomic_field(conductor)), coeffs_(static_cast<std::size_t>(field_->degree)) {
  coeffs_[0] = value;
}

Cyclotomic::Cyclotomic(int conductor, std::span<const Rational> coeffs)
    : field_(&cyclotomic_field(conductor)), coeffs_(static_cast<std::size_t>(field_->degree)) {
  // accepts any polynomial in zeta and reduces it
  Coeffs acc(static_cast<std::size_t>(field_->degree));
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    const auto& pw = field_->powers[j % static_cast<std::size_t>(conductor)];
    for (std::size_t i = 0; i < pw.size(); ++i) {
      if (pw[i] != 0) acc[i] += coeffs[j] * Rational(pw[i]);
    }
  }
  coeffs_ = std::move(acc);
}

Cyclotomic Cyclotomic::zeta(int conductor, std::int64_t power) {
  const auto& f = cyclotomic_field(conductor);
  const auto& pw = f.powers[static_cast<std::size_t>(mod_pos(power, conductor))];
  Coeffs c(pw.size());
  for (std::size_t i = 0; i < pw.size(); ++i) c[i] = Rational(pw[i]);
  return Cyclotomic(&f, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const {
  if (!coeffs_[0].is_one()) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

std::optional<Rational> Cyclotomic::rational_value() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return std::nullopt;
  }
  return coeffs_[0];
}

Cyclotomic Cyclotomic::embed(int m) const {
  const int own = conductor();
  if (m == own) return *this;
  if (m % own != 0) {
    throw InputError("cannot embed conductor " + std::to_string(own) + " into " +
                     std::to_string(m));
  }
  const auto& target = cyclotomic_field(m);
  const int step = m / own;
  Coeffs out(static_cast<std::size_t>(target.degree));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto& pw = target.powers[(i * static_cast<std::size_t>(step)) % static_cast<std::size_t>(m)];
    for (std::size_t k = 0; k < pw.size(); ++k) {
      if (pw[k] != 0) out[k] += coeffs_[i] * Rational(pw[k]);
    }
  }
  return Cyclotomic(&target, std::move(out));
}

std::optional<Cyclotomic> Cyclotomic::restrict_to(int m) const {
  const int own = conductor();
  if (m == own) return *this;
  if (own % m != 0) return std::nullopt;
  const auto& sub = cyclotomic_field(m);
  const auto rows = static_cast<std::size_t>(field_->degree);
  const auto cols = static_cast<std::size_t>(sub.degree);
  std::vector<Rational> a(rows * cols);
  for (std::size_t j = 0; j < cols; ++j) {
    Cyclotomic basis = Cyclotomic::zeta(m, static_cast<std::int64_t>(j)).embed(own);
    for (std::size_t i = 0; i < rows; ++i) a[i * cols + j] = basis.coeffs_[i];
  }
  std::vector<Rational> b(coeffs_.begin(), coeffs_.end());
  auto x = solve_rational(std::move(a), rows, cols, std::move(b));
  if (!x) return std::nullopt;
  return Cyclotomic(&sub, Coeffs(x->begin(), x->end()));
}

Cyclotomic Cyclotomic::conjugate() const {
  const auto m = static_cast<std::size_t>(conductor());
  Coeffs out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto& pw = field_->powers[(m - i) % m];
    for (std::size_t k = 0; k < pw.size(); ++k) {
      if (pw[k] != 0) out[k] += coeffs_[i] * Rational(pw[k]);
    }
  }
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw InputError("division by zero in Q(zeta_" + std::to_string(conductor()) + ")");
  if (coeffs_.size() == 1) return Cyclotomic(field_, Coeffs{coeffs_[0].inverse()});
  // Solve (multiplication-by-this) x = 1 in the power basis.
  const auto n = coeffs_.size();
  std::vector<Rational> a(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    Cyclotomic col = *this * Cyclotomic::zeta(conductor(), static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i < n; ++i) a[i * n + j] = col.coeffs_[i];
  }
  std::vector<Rational> b(n);
  b[0] = Rational(1);
  auto x = solve_rational(std::move(a), n, n, std::move(b));
  if (!x) throw ConsistencyError("nonzero cyclotomic element has no inverse");
  return Cyclotomic(field_, Coeffs(x->begin(), x->end()));
}

std::string Cyclotomic::format() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Rational c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool first = out.empty();
    if (!first) {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    if (i == 0) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += "z^" + std::to_string(i);
    } else {
      out += c.to_string() + "*z^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = static_cast<std::size_t>(conductor()) * 0x9E3779B97F4A7C15ULL;
  for (const auto& c : coeffs_) h ^= c.hash() + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h;
}

Cyclotomic Cyclotomic::operator-() const {
  Coeffs out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ != b.field_) {
    const int m = lcm_conductor(a.conductor(), b.conductor());
    return a.embed(m) + b.embed(m);
  }
  Cyclotomic::Coeffs out(a.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeffs_[i] + b.coeffs_[i];
  return Cyclotomic(a.field_, std::move(out));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ != b.field_) {
    const int m = lcm_conductor(a.conductor(), b.conductor());
    return a.embed(m) - b.embed(m);
  }
  Cyclotomic::Coeffs out(a.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeffs_[i] - b.coeffs_[i];
  return Cyclotomic(a.field_, std::move(out));
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ != b.field_) {
    const int m = lcm_conductor(a.conductor(), b.conductor());
    return a.embed(m) * b.embed(m);
  }
  const auto n = a.coeffs_.size();
  if (n == 1) return Cyclotomic(a.field_, Cyclotomic::Coeffs{a.coeffs_[0] * b.coeffs_[0]});
  const auto m = static_cast<std::size_t>(a.conductor());
  std::vector<Rational> bucket(std::min(m, 2 * n - 1));
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      bucket[(i + j) % m] += a.coeffs_[i] * b.coeffs_[j];
      any = true;
    }
  }
  Cyclotomic::Coeffs out(n);
  if (!any) return Cyclotomic(a.field_, std::move(out));
  for (std::size_t k = 0; k < bucket.size(); ++k) {
    if (bucket[k].is_zero()) continue;
    if (k < n) {
      out[k] += bucket[k];
      continue;
    }
    const auto& pw = a.field_->powers[k];
    for (std::size_t i = 0; i < n; ++i) {
      if (pw[i] != 0) out[i] += bucket[k] * Rational(pw[i]);
    }
  }
  return Cyclotomic(a.field_, std::move(out));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ != b.field_) {
    const int m = lcm_conductor(a.conductor(), b.conductor());
    return a.embed(m) == b.embed(m);
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  }
  return true;
}

std::strong_ordering Cyclotomic::compare_repr(const Cyclotomic& a, const Cyclotomic& b) {
  if (auto c = a.conductor() <=> b.conductor(); c != 0) return c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.format(); }

// ---------------------------------------------------------------------------
// Literal grammar:
//   expr := term (('+'|'-') term)*
//   term := rat ('*' 'z' '^' nat)? | 'z' '^' nat | 'z'
//   rat  := int ('/' nat)?        int := '-'? digits
// Whitespace is ignored everywhere.

namespace {

class LiteralParser {
 public:
  LiteralParser(std::string_view text, int conductor) : conductor_(conductor) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        cols_.push_back(i + 1);
      }
    }
  }

  Cyclotomic parse() {
    if (chars_.empty()) fail("empty literal");
    std::vector<Rational> poly(static_cast<std::size_t>(conductor_));
    term(poly, false);
    while (pos_ < chars_.size()) {
      char op = chars_[pos_];
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      ++pos_;
      term(poly, op == '-');
    }
    return Cyclotomic(conductor_, poly);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t col = pos_ < cols_.size() ? cols_[pos_] : (cols_.empty() ? 1 : cols_.back() + 1);
    throw ParseError(what, 0, col);
  }

  bool peek(char c) const { return pos_ < chars_.size() && chars_[pos_] == c; }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string digits() {
    std::string out;
    while (pos_ < chars_.size() && chars_[pos_] >= '0' && chars_[pos_] <= '9') out += chars_[pos_++];
    if (out.empty()) fail("expected digits");
    return out;
  }

  std::int64_t exponent() {
    std::size_t at = pos_;
    std::string d = digits();
    if (d.size() > 9 || std::stoll(d) >= conductor_) {
      pos_ = at;
      fail("exponent " + d + " not below conductor " + std::to_string(conductor_));
    }
    return std::stoll(d);
  }

  void term(std::vector<Rational>& poly, bool negate) {
    Rational coeff(1);
    std::int64_t power = 0;
    if (peek('z')) {
      ++pos_;
      if (peek('^')) {
        ++pos_;
        power = exponent();
      } else {
        if (1 >= conductor_) {
          --pos_;
          fail("exponent 1 not below conductor " + std::to_string(conductor_));
        }
        power = 1;
      }
    } else {
      std::string text;
      if (peek('-')) {
        text += '-';
        ++pos_;
      }
      text += digits();
      if (peek('/')) {
        ++pos_;
        std::size_t at = pos_;
        std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) {
          pos_ = at;
          fail("zero denominator");
        }
        text += "/" + den;
      }
      coeff = Rational::parse(text);
      if (peek('*')) {
        ++pos_;
        expect('z');
        expect('^');
        power = exponent();
      }
    }
    if (negate) coeff = -coeff;
    poly[static_cast<std::size_t>(power)] += coeff;
  }

  int conductor_;
  std::vector<char> chars_;
  std::vector<std::size_t> cols_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic Cyclotomic::parse(std::string_view text, int conductor) {
  cyclotomic_field(conductor);  // validates the conductor
  return LiteralParser(text, conductor).parse();
}

}  // namespace symquot
