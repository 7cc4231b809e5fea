#include "wrt/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace wrt {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

bool fits(i128 v) { return v >= -static_cast<i128>(kMax) && v <= static_cast<i128>(kMax); }

// Reduces num/den (den > 0) and stores it inline if it fits.
bool reduce_into(i128 num, i128 den, std::int64_t& out_num, std::int64_t& out_den) {
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (!fits(num) || !fits(den)) return false;
  out_num = static_cast<std::int64_t>(num);
  out_den = static_cast<std::int64_t>(den);
  return true;
}

mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_mpz(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  i128 n = num;
  i128 d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (!reduce_into(n, d, num_, den_)) set_big(mpq_class(to_mpz(num), to_mpz(den)));
}

Rational::Rational(const mpq_class& value) {
  mpq_class copy(value);
  copy.canonicalize();
  set_big(std::move(copy));
}

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Rational::set_big(mpq_class value) {
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(value));
}

Rational Rational::parse(std::string_view text) {
  bool negative = false;
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num_text = body;
  std::string_view den_text;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_text = body.substr(0, slash);
    den_text = body.substr(slash + 1);
    if (!all_digits(den_text)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  if (!all_digits(num_text)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

  // 18 digits always fit in int64.
  if (num_text.size() <= 18 && den_text.size() <= 18) {
    std::int64_t n = 0;
    std::int64_t d = 1;
    std::from_chars(num_text.data(), num_text.data() + num_text.size(), n);
    if (!den_text.empty()) std::from_chars(den_text.data(), den_text.data() + den_text.size(), d);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(negative ? -n : n, d);
  }
  mpz_class n = parse_mpz(num_text);
  mpz_class d = den_text.empty() ? mpz_class(1) : parse_mpz(den_text);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

bool Rational::is_negative() const { return big_ ? sgn(*big_) < 0 : num_ < 0; }

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == rhs.den_) {
      std::int64_t sum;
      if (!__builtin_add_overflow(num_, rhs.num_, &sum) && sum != std::numeric_limits<std::int64_t>::min()) {
        if (den_ == 1) {
          num_ = sum;
          return *this;
        }
        if (reduce_into(sum, den_, num_, den_)) return *this;
      }
    }
    i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
    i128 d = static_cast<i128>(den_) * rhs.den_;
    std::int64_t rn, rd;
    if (reduce_into(n, d, rn, rd)) {
      num_ = rn;
      den_ = rd;
      return *this;
    }
  }
  set_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!rhs.big_) return *this += Rational(-rhs.num_, rhs.den_);
  set_big(to_mpq() - rhs.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    i128 n = static_cast<i128>(num_) * rhs.num_;
    i128 d = static_cast<i128>(den_) * rhs.den_;
    std::int64_t rn, rd;
    if (reduce_into(n, d, rn, rd)) {
      num_ = rn;
      den_ = rd;
      return *this;
    }
  }
  set_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  if (!big_ && !rhs.big_) {
    i128 n = static_cast<i128>(num_) * rhs.den_;
    i128 d = static_cast<i128>(den_) * rhs.num_;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    std::int64_t rn, rd;
    if (reduce_into(n, d, rn, rd)) {
      num_ = rn;
      den_ = rd;
      return *this;
    }
  }
  set_big(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  // Canonical forms: a spilled value never equals an inline one.
  if (lhs.big_ && rhs.big_) return *lhs.big_ == *rhs.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) {
    if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
    i128 l = static_cast<i128>(lhs.num_) * rhs.den_;
    i128 r = static_cast<i128>(rhs.num_) * lhs.den_;
    return l <=> r;
  }
  int c = cmp(lhs.to_mpq(), rhs.to_mpq());
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace wrt
