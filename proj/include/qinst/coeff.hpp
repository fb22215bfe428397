#pragma once

// Exact Laurent polynomials in the deformation parameter q with rational
// coefficients. This is the scalar ring of every other module.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qinst {

using Rational = mpq_class;

/// An exact rational. Values whose reduced numerator and denominator fit in
/// 63 bits are held inline; anything larger lives in a shared GMP rational.
/// The representation is canonical, so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value);  // NOLINT: implicit integer scalars read naturally
  explicit Scalar(const Rational& value);

  Rational to_rational() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  int sign() const;
  bool is_inline() const { return !big_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  /// Same text as GMP: `3`, `-1/2`.
  std::string to_string() const;
  std::size_t hash() const;

 private:
  static Scalar from_big(Rational value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const Rational> big_;
};

class Laurent {
 public:
  using Term = std::pair<int, Scalar>;

  Laurent() = default;
  Laurent(long value);  // NOLINT: implicit integer scalars read naturally
  explicit Laurent(const Rational& value);
  explicit Laurent(const Scalar& value);

  /// c * q^e
  static Laurent monomial(const Scalar& c, int e);
  static Laurent monomial(const Rational& c, int e) { return monomial(Scalar(c), e); }
  static Laurent q_pow(int e) { return monomial(Scalar(1), e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  /// Terms sorted by ascending exponent; no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  /// Coefficient of q^e.
  Rational coeff(int e) const;

  Laurent& operator+=(const Laurent& rhs);
  Laurent& operator-=(const Laurent& rhs);
  Laurent& operator*=(const Laurent& rhs);
  /// *this += a * b without a temporary.
  Laurent& add_product(const Laurent& a, const Laurent& b);
  /// Multiply by q^e in place.
  Laurent& shift(int e);

  friend Laurent operator+(Laurent lhs, const Laurent& rhs) { return lhs += rhs; }
  friend Laurent operator-(Laurent lhs, const Laurent& rhs) { return lhs -= rhs; }
  friend Laurent operator*(const Laurent& lhs, const Laurent& rhs);
  Laurent operator-() const;

  friend bool operator==(const Laurent& lhs, const Laurent& rhs) { return lhs.terms_ == rhs.terms_; }

  /// Substitutes q := q0. Throws std::invalid_argument when q0 == 0.
  Rational eval_at(const Rational& q0) const;

  /// Canonical text: `-1*q^-2 + 2 + 1*q^3`, `0` for zero.
  std::string to_string() const;
  /// Inverse of to_string. Throws std::invalid_argument on malformed text.
  static Laurent parse(std::string_view text);

  std::size_t hash() const;

 private:
  void add_term(int e, const Scalar& c);

  std::vector<Term> terms_;
};

Laurent operator*(const Laurent& lhs, const Laurent& rhs);

inline Laurent q_pow(int e) { return Laurent::q_pow(e); }

/// Canonical rational text (`3`, `-1/2`).
std::string rational_to_string(const Rational& r);
/// Parses `[-]digits[/digits]`; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace qinst
