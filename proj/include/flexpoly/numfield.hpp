#pragma once

// Exact arithmetic in towers of real quadratic extensions of Q.
//
// A tower Q = F_0 < F_1 < ... < F_k is built by adjoining, at each level,
// the positive square root of a positive element of the field below that is
// certified not to be a square there. An element of F_k is stored as its
// 2^k rational coordinates in the monomial basis
//   { prod_{i in S} sqrt(d_i) : S subset of {1..k} },
// index bit (i-1) selecting sqrt(d_i). The top half of the vector is the
// coefficient q in x = p + q * sqrt(d_k), the bottom half is p.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flexpoly {

using Rational = mpq_class;

/// Parses "p/q", "p", or a decimal literal such as "-6.8955" or "1e-3".
/// Decimal literals are converted exactly.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string rational_string(const Rational& r);

/// Rounds to nearest at `digits` decimals and formats without exponent.
std::string decimal_string(const Rational& r, int digits);

class FieldElem;

namespace detail {
struct TowerLevel;
}

class NumfieldError : public std::runtime_error {
 public:
  enum class Kind {
    NonPositiveRadicand,
    AlreadySquare,
    DivisionByZero,
    IncompatibleTowers,
    NegativeInput,
    NotInSubfield,
    Parse,
  };

  NumfieldError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class FieldTower {
 public:
  /// The rationals.
  FieldTower() = default;

  int depth() const noexcept;

  /// Radicand d_level, an element of the tower truncated to level - 1.
  const FieldElem& radicand(int level) const;

  /// sqrt(d_level) as an element of this tower.
  FieldElem generator(int level) const;

  FieldTower truncated(int depth) const;

  /// True if this tower's levels are the first levels of `other`.
  bool is_prefix_of(const FieldTower& other) const;

  friend bool operator==(const FieldTower& a, const FieldTower& b) {
    return a.depth() == b.depth() && a.is_prefix_of(b);
  }

  /// Readable form such as "Q(sqrt(31), sqrt(166))".
  std::string to_string() const;

  // Internal: the top level node, nullptr for Q.
  const detail::TowerLevel* top_level() const noexcept { return top_.get(); }

 private:
  friend class FieldElem;
  friend FieldTower adjoin(const FieldTower&, const FieldElem&);

  explicit FieldTower(std::shared_ptr<const detail::TowerLevel> top) : top_(std::move(top)) {}

  const detail::TowerLevel* level_ptr(int level) const;

  std::shared_ptr<const detail::TowerLevel> top_;
};

/// The deeper of two towers when one is a prefix of the other.
/// Throws IncompatibleTowers otherwise.
const FieldTower& common_tower(const FieldTower& a, const FieldTower& b);

/// Closed interval with rational endpoints.
struct DecimalInterval {
  Rational lower;
  Rational upper;

  Rational width() const { return upper - lower; }
  Rational midpoint() const { return (lower + upper) / 2; }
  bool contains(const Rational& v) const { return lower <= v && v <= upper; }
  bool excludes_zero() const { return lower > 0 || upper < 0; }
  std::string to_string(int digits) const { return decimal_string(midpoint(), digits); }
};

class FieldElem {
 public:
  FieldElem() : coeffs_(1) {}
  FieldElem(long value) : coeffs_{Rational(value)} {}  // NOLINT(google-explicit-constructor)
  FieldElem(int value) : FieldElem(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  FieldElem(Rational value) : coeffs_{std::move(value)} { coeffs_[0].canonicalize(); }  // NOLINT

  /// Takes 2^depth coordinates in the monomial basis of `tower`.
  FieldElem(FieldTower tower, std::vector<Rational> coeffs);

  static FieldElem zero(const FieldTower& tower);
  static FieldElem one(const FieldTower& tower);

  const FieldTower& tower() const noexcept { return tower_; }
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  /// Same number over a tower that has this one as a prefix.
  FieldElem lifted(const FieldTower& deeper) const;

  /// Same number over a prefix of this tower. Throws NotInSubfield when the
  /// element has a nonzero coordinate outside the prefix.
  FieldElem lowered(const FieldTower& prefix) const;

  /// Top-level split x = p + q * sqrt(d_k); p, q over the parent tower.
  /// Requires depth >= 1.
  std::pair<FieldElem, FieldElem> split() const;

  /// p + q * sqrt(d_k) for p, q over `tower` truncated by one level.
  static FieldElem join(const FieldTower& tower, const FieldElem& p, const FieldElem& q);

  bool is_zero() const noexcept;
  bool is_rational() const noexcept;
  /// Only valid when is_rational().
  const Rational& rational_value() const;

  FieldElem inverse() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& rhs);
  FieldElem& operator-=(const FieldElem& rhs);
  FieldElem& operator*=(const FieldElem& rhs);
  FieldElem& operator/=(const FieldElem& rhs);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

  /// Structural equality of the represented numbers (towers must be compatible).
  friend bool operator==(const FieldElem& a, const FieldElem& b) { return (a - b).is_zero(); }

  /// Readable rendering, e.g. "187/12*sqrt(166)".
  std::string to_string() const;

  /// Nearest double, from a certified 17-digit enclosure.
  double to_double() const;

 private:
  FieldTower tower_;
  std::vector<Rational> coeffs_;
};

class AlreadySquare : public NumfieldError {
 public:
  explicit AlreadySquare(FieldElem root)
      : NumfieldError(Kind::AlreadySquare, "radicand is a square in the field: " + root.to_string()),
        root_(std::move(root)) {}

  const FieldElem& root() const noexcept { return root_; }

 private:
  FieldElem root_;
};

namespace detail {
struct TowerLevel {
  std::shared_ptr<const TowerLevel> parent;
  int depth = 0;
  FieldElem radicand;
};
}  // namespace detail

/// Adjoins sqrt(d). Throws NonPositiveRadicand when sign(d) <= 0 and
/// AlreadySquare (carrying the root) when d is a square in `tower`.
FieldTower adjoin(const FieldTower& tower, const FieldElem& d);

/// Exact sign of the represented real, with every sqrt taken positive.
int sign(const FieldElem& x);

/// r with r * r == x when x is a square in its own tower. Throws NegativeInput
/// when x < 0. The returned root can have either sign.
std::optional<FieldElem> sqrt_in_field(const FieldElem& x);

/// Like sqrt_in_field, but the returned root is the nonnegative one.
std::optional<FieldElem> positive_sqrt_in_field(const FieldElem& x);

/// x = c^2 * y with rational c > 0 and y having integer coordinates whose
/// gcd is free of small square factors. Used to keep adjoined radicands small.
std::pair<Rational, FieldElem> strip_rational_squares(const FieldElem& x);

/// Certified enclosure of width < 10^-digits.
DecimalInterval approx(const FieldElem& x, int digits);

/// Certified enclosure computed on a dyadic grid of 2^-bits; no width guarantee.
DecimalInterval enclose(const FieldElem& x, std::uint32_t bits);

}  // namespace flexpoly
