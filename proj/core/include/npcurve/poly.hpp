#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "npcurve/ffield.hpp"

namespace npcurve {

// Dense univariate polynomial over a fixed F_q with packed coefficients,
// constant term first, no trailing zeros (empty vector = zero polynomial).
struct FPoly {
  FieldSpec spec;
  std::vector<std::uint64_t> c;

  static FPoly zero(const FieldSpec& s) { return FPoly{s, {}}; }
  static FPoly constant(const FieldSpec& s, std::uint64_t v) {
    return v == 0 ? zero(s) : FPoly{s, {v}};
  }
  static FPoly monomial(const FieldSpec& s, std::uint64_t coeff, std::size_t deg);

  int degree() const { return int(c.size()) - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c.empty(); }
  bool is_constant() const { return c.size() <= 1; }
  std::uint64_t leading() const { return c.empty() ? 0 : c.back(); }
  std::uint64_t coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
  void trim();

  std::uint64_t eval(std::uint64_t x) const;
  std::string to_string(const std::string& var = "x") const;

  bool operator==(const FPoly& o) const { return spec == o.spec && c == o.c; }
};

FPoly operator+(const FPoly& a, const FPoly& b);
FPoly operator-(const FPoly& a, const FPoly& b);
FPoly operator*(const FPoly& a, const FPoly& b);
FPoly scale(const FPoly& a, std::uint64_t k);
FPoly poly_pow(const FPoly& a, std::uint64_t e);
// Quotient and remainder; errors: DivisionByZeroFunction when b = 0.
std::pair<FPoly, FPoly> divmod(const FPoly& a, const FPoly& b);
FPoly gcd(FPoly a, FPoly b);  // monic (or zero)
FPoly derivative(const FPoly& a);
FPoly monic(const FPoly& a);

// f = num/den in lowest terms with monic den. The zero function is num = 0,
// den = 1.
struct RationalFn {
  FPoly num, den;

  static RationalFn from(const FPoly& num, const FPoly& den);  // normalizes
  static RationalFn from_poly(const FPoly& p) { return from(p, FPoly::constant(p.spec, 1)); }

  const FieldSpec& spec() const { return num.spec; }
  bool is_zero() const { return num.is_zero(); }
  bool is_polynomial() const { return den.degree() == 0; }
  bool is_constant() const { return num.is_constant() && den.is_constant(); }

  RationalFn operator+(const RationalFn& o) const;
  RationalFn operator-(const RationalFn& o) const;
  RationalFn operator*(const RationalFn& o) const;
  RationalFn operator/(const RationalFn& o) const;  // errors: DivisionByZeroFunction
  bool operator==(const RationalFn& o) const { return num == o.num && den == o.den; }

  std::string to_string() const;
};

// Explicit pole/branch data for a rational function: polynomial part plus
// principal parts at each finite pole. Defined only when every finite pole
// is rational over the coefficient field.
struct PolePart {
  FieldElement location;
  std::int64_t order = 0;
  // principal[i] is the coefficient of (x - b)^-(i+1), i = 0..order-1.
  std::vector<FieldElement> principal;
};

struct RationalShape {
  FPoly polynomial_part;
  std::vector<PolePart> finite_poles;    // sorted by packed location
  std::int64_t infinity_pole_order = 0;  // deg num - deg den when positive
};

// Errors: PoleNotRational when the denominator has an irreducible factor of
// degree >= 2 over the coefficient field.
RationalShape decompose(const RationalFn& f);

}  // namespace npcurve
