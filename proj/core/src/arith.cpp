#include "pcoset/arith.hpp"

#include "pcoset/errors.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

namespace pcoset {

Prime Prime::checked(std::int64_t value) {
  if (value < 2) throw InputError("p must be a prime >= 2, got " + std::to_string(value));
  if (value > 1'000'000'000'000LL) throw InputError("p > 10^12 cannot be certified by trial division");
  const auto v = static_cast<std::uint64_t>(value);
  for (std::uint64_t d = 2; d * d <= v && d <= 1'000'000; ++d) {
    if (v % d == 0) throw InputError(std::to_string(value) + " is not prime");
  }
  return Prime(v);
}

int valuation(const mpz_class& x, const Prime& p) {
  if (sgn(x) == 0) return kInfiniteValuation;
  mpz_class rest;
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.as_mpz().get_mpz_t()));
}

int valuation(const PadicRational& x, const Prime& p) {
  if (sgn(x) == 0) return kInfiniteValuation;
  const int vn = valuation(x.get_num(), p);
  if (vn > 0) return vn;
  return -valuation(x.get_den(), p);
}

PadicRational prime_power(const Prime& p, int e) {
  mpz_class q;
  mpz_pow_ui(q.get_mpz_t(), p.as_mpz().get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return PadicRational(q);
  PadicRational r(mpz_class(1), q);
  r.canonicalize();
  return r;
}

PadicRational residue_below(const PadicRational& x, int a, const Prime& p) {
  const int v = valuation(x, p);
  if (v >= a) return PadicRational(0);
  // x = p^v * u with u a p-adic unit; keep u mod p^{a-v}.
  const PadicRational u = x / prime_power(p, v);
  mpz_class modulus;
  mpz_pow_ui(modulus.get_mpz_t(), p.as_mpz().get_mpz_t(), static_cast<unsigned long>(a - v));
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), u.get_den().get_mpz_t(), modulus.get_mpz_t());
  mpz_class m = u.get_num() * den_inv;
  mpz_fdiv_r(m.get_mpz_t(), m.get_mpz_t(), modulus.get_mpz_t());
  return PadicRational(m) * prime_power(p, v);
}

PadicRational frac_part(const PadicRational& x, const Prime& p) { return residue_below(x, 0, p); }

std::complex<double> char_value(const PadicRational& x, const Prime& p) {
  const double f = frac_part(x, p).get_d();
  return std::polar(1.0, 2.0 * std::numbers::pi * f);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

PadicRational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("bad rational literal '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  if (text.front() == '-') n = -n;
  PadicRational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const PadicRational& x) { return x.get_str(10); }

}  // namespace pcoset
