#pragma once

#include <gmpxx.h>

#include <climits>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace pcoset {

/// Exact rational viewed inside Q_p. The prime is supplied by context.
using PadicRational = mpq_class;

/// v_p(0); ordered above every finite valuation.
inline constexpr int kInfiniteValuation = INT_MAX;

/// A prime number, validated at construction by trial division.
class Prime {
public:
  /// Throws InputError if `value` is not prime or exceeds 10^12.
  static Prime checked(std::int64_t value);

  std::uint64_t value() const { return value_; }
  const mpz_class& as_mpz() const { return mpz_; }

  friend bool operator==(const Prime& a, const Prime& b) { return a.value_ == b.value_; }

private:
  explicit Prime(std::uint64_t v) : value_(v), mpz_(static_cast<unsigned long>(v)) {}
  std::uint64_t value_;
  mpz_class mpz_;
};

int valuation(const mpz_class& x, const Prime& p);
int valuation(const PadicRational& x, const Prime& p);

/// p^e as an exact rational; e may be negative.
PadicRational prime_power(const Prime& p, int e);

/// The unique f = m / p^r in [0, 1) with x - f in Z_(p).
PadicRational frac_part(const PadicRational& x, const Prime& p);

/// exp(2 pi i frac_part(x)).
std::complex<double> char_value(const PadicRational& x, const Prime& p);

/// Canonical representative of the class of x in Q_p / p^a Z_(p): the p-adic
/// expansion of x truncated below p^a. Zero iff v_p(x) >= a.
PadicRational residue_below(const PadicRational& x, int a, const Prime& p);

/// Parses "n" or "n/d" (optional sign, decimal digits).
PadicRational parse_rational(std::string_view text);
std::string to_string(const PadicRational& x);

}  // namespace pcoset
