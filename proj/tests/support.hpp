#pragma once

#include "pcoset/arith.hpp"
#include "pcoset/matrix.hpp"
#include "pcoset/module.hpp"

#include <string_view>

namespace pcoset::test {

inline PadicRational q(std::string_view s) { return parse_rational(s); }

inline Prime P(std::int64_t v) { return Prime::checked(v); }

/// Lattice with integral generators given as rows.
inline Module lat(std::initializer_list<std::initializer_list<long>> rows) {
  return Module::lattice(RatMatrix::of(rows));
}

inline Module diag_lattice(const Prime& p, std::initializer_list<int> exps) {
  RatVector d;
  for (int e : exps) d.push_back(prime_power(p, e));
  return Module::lattice(RatMatrix::diagonal(d));
}

}  // namespace pcoset::test
