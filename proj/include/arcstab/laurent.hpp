#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "arcstab/rational.hpp"

namespace arcstab {

/// Finitely supported element of Q((t)): a map exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(implicit): constants embed
  LaurentPoly(std::int64_t c) : LaurentPoly(make_rational(c)) {}  // NOLINT(implicit)

  static LaurentPoly monomial(const Rational& c, std::int64_t exponent);
  /// The uniformizer t.
  static LaurentPoly t() { return monomial(1, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Nonzero constant times a power of t, i.e. a unit of Q[t, 1/t].
  bool is_monomial() const { return terms_.size() == 1; }
  Rational coefficient(std::int64_t exponent) const;
  /// Largest exponent present; only valid for nonzero polynomials.
  std::int64_t max_exponent() const { return terms_.rbegin()->first; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Nonnegative powers; negative powers only for monomials.
  LaurentPoly pow(std::int64_t k) const;
  /// Exact inverse of a monomial unit; throws for anything else.
  LaurentPoly inverse_monomial() const;

 private:
  void add_term(std::int64_t e, const Rational& c);
  Terms terms_;
};

/// t-adic valuation: the smallest exponent, +infinity for 0.
ExtInt val(const LaurentPoly& f);

/// Minimum valuation over the nonzero entries; throws InputError for the zero vector.
std::int64_t ord0(std::span<const LaurentPoly> entries);

/// Canonical text in the variable `var`, highest exponent first.
std::string to_string(const LaurentPoly& f, const std::string& var = "t");

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentPoly determinant(const LaurentMatrix& a);
/// Classical adjugate, so that a * adjugate(a) = det(a) * I.
LaurentMatrix adjugate(const LaurentMatrix& a);
LaurentMatrix identity_matrix(std::size_t m);

}  // namespace arcstab
