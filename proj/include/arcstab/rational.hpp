#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace arcstab {

// Exact coefficient field for every computation in the library.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional leading sign); throws InputError on junk.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, or "p" when the denominator is one.
std::string to_string(const Rational& q);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

/// An integer extended by +infinity, the codomain of t-adic valuations.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : value_(v) {}  // NOLINT(implicit)
  static constexpr ExtInt infinity() {
    ExtInt e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  /// Only meaningful when finite.
  constexpr std::int64_t value() const { return value_; }

  friend constexpr bool operator==(const ExtInt& a, const ExtInt& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

std::string to_string(const ExtInt& e);

}  // namespace arcstab
