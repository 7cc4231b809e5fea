// Exact rational numbers with an inline 64-bit fast path.
//
// Values whose numerator and denominator fit in int64 are stored inline and
// combined with 128-bit intermediates. Anything larger spills into a GMP
// mpq_class and is demoted back to the inline form whenever it fits again.
// The representation is always canonical (lowest terms, positive
// denominator), so equality is structural.

#ifndef WRT_RATIONAL_HPP_
#define WRT_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wrt {

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design of arithmetic
  // Throws std::invalid_argument when den == 0.
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  // Accepts "p", "p/q" and an optional leading '-'. Digits only, no spaces.
  // Throws std::invalid_argument on anything else or on a zero denominator.
  static Rational parse(std::string_view text);

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  mpq_class to_mpq() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_negative() const;
  bool is_integer() const;
  // True when the value lives in the inline representation.
  bool is_small() const { return !big_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs);
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  void set_big(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace wrt

#endif  // WRT_RATIONAL_HPP_
