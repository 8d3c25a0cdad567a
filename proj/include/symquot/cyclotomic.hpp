#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "symquot/rational.hpp"

namespace symquot {

/// Largest conductor accepted anywhere in the library.
inline constexpr int kMaxConductor = 1000;

/// Static data for Q(zeta_m): the cyclotomic polynomial and every power of
/// zeta written in the power basis 1, zeta, ..., zeta^(phi-1).
struct CyclotomicField {
  int conductor = 1;
  int degree = 1;                                 // phi(m)
  std::vector<std::int64_t> modulus;              // Phi_m, low degree first, monic
  std::vector<std::vector<std::int64_t>> powers;  // powers[j] = zeta^j, j < m
};

/// Field data for conductor m, built once and cached. Thread-safe.
const CyclotomicField& cyclotomic_field(int conductor);

/// Exact element of Q(zeta_m) in the power basis modulo Phi_m.
///
/// The representation is canonical at a fixed conductor. Binary operations
/// on elements of different conductors first embed both into the lcm, so
/// `==` compares values, not representations.
class Cyclotomic {
 public:
  using Coeffs = boost::container::small_vector<Rational, 2>;

  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(const Rational& value, int conductor = 1);  // NOLINT(google-explicit-constructor)
  Cyclotomic(std::int64_t value) : Cyclotomic(Rational(value)) {}  // NOLINT
  Cyclotomic(int conductor, std::span<const Rational> coeffs);

  static Cyclotomic zeta(int conductor, std::int64_t power = 1);
  /// Parses the literal grammar. `z` denotes zeta_conductor. Throws ParseError.
  static Cyclotomic parse(std::string_view text, int conductor);

  int conductor() const { return field_->conductor; }
  const CyclotomicField& field() const { return *field_; }
  std::span<const Rational> coeffs() const { return {coeffs_.data(), coeffs_.size()}; }

  bool is_zero() const;
  bool is_one() const;
  /// Value as a rational when the element lies in Q.
  std::optional<Rational> rational_value() const;

  /// Same value at conductor `m`; requires conductor() | m.
  Cyclotomic embed(int m) const;
  /// Same value at conductor `m` when it lies in Q(zeta_m) (m | conductor()).
  std::optional<Cyclotomic> restrict_to(int m) const;

  /// Image under zeta -> zeta^-1 (complex conjugation).
  Cyclotomic conjugate() const;
  Cyclotomic inverse() const;

  /// Canonical text form; parse(format(x), conductor) == x.
  std::string format() const;
  /// Hash of the representation. Consistent with == at a fixed conductor,
  /// which is the only way the library uses it.
  std::size_t hash() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Total order on representations (conductor, then coefficients). Only
  /// meaningful between elements of equal conductor; used for deterministic
  /// output ordering.
  static std::strong_ordering compare_repr(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(const CyclotomicField* field, Coeffs coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {}

  const CyclotomicField* field_;
  Coeffs coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

int lcm_conductor(int a, int b);

}  // namespace symquot

template <>
struct std::hash<symquot::Cyclotomic> {
  std::size_t operator()(const symquot::Cyclotomic& x) const { return x.hash(); }
};
