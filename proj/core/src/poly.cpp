#include "npcurve/poly.hpp"

#include <algorithm>
#include <sstream>

namespace npcurve {

namespace {
void require_same_spec(const FPoly& a, const FPoly& b) {
  if (!(a.spec == b.spec))
    fail(ErrorCode::FieldMismatch, "polynomials over different fields");
}
}  // namespace

FPoly FPoly::monomial(const FieldSpec& s, std::uint64_t coeff, std::size_t deg) {
  if (coeff == 0) return zero(s);
  FPoly f{s, std::vector<std::uint64_t>(deg + 1, 0)};
  f.c[deg] = coeff;
  return f;
}

void FPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::uint64_t FPoly::eval(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = spec.add(spec.mul(acc, x), c[i]);
  return acc;
}

std::string FPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    FieldElement e(spec, c[i]);
    std::string coeff = e.to_string();
    bool needs_parens = coeff.find('+') != std::string::npos;
    if (i == 0) {
      os << (needs_parens ? "(" + coeff + ")" : coeff);
      continue;
    }
    if (coeff != "1") os << (needs_parens ? "(" + coeff + ")" : coeff) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

FPoly operator+(const FPoly& a, const FPoly& b) {
  require_same_spec(a, b);
  FPoly out{a.spec, {}};
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = a.spec.add(a.coeff(i), b.coeff(i));
  out.trim();
  return out;
}

FPoly operator-(const FPoly& a, const FPoly& b) {
  require_same_spec(a, b);
  FPoly out{a.spec, {}};
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = a.spec.sub(a.coeff(i), b.coeff(i));
  out.trim();
  return out;
}

FPoly operator*(const FPoly& a, const FPoly& b) {
  require_same_spec(a, b);
  if (a.is_zero() || b.is_zero()) return FPoly::zero(a.spec);
  FPoly out{a.spec, std::vector<std::uint64_t>(a.c.size() + b.c.size() - 1, 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] == 0) continue;
      out.c[i + j] = a.spec.add(out.c[i + j], a.spec.mul(a.c[i], b.c[j]));
    }
  }
  out.trim();
  return out;
}

FPoly scale(const FPoly& a, std::uint64_t k) {
  if (k == 0) return FPoly::zero(a.spec);
  FPoly out = a;
  for (auto& v : out.c) v = a.spec.mul(v, k);
  out.trim();
  return out;
}

FPoly poly_pow(const FPoly& a, std::uint64_t e) {
  FPoly acc = FPoly::constant(a.spec, 1);
  FPoly b = a;
  while (e) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

std::pair<FPoly, FPoly> divmod(const FPoly& a, const FPoly& b) {
  require_same_spec(a, b);
  if (b.is_zero()) fail(ErrorCode::DivisionByZeroFunction, "polynomial division by zero");
  FPoly rem = a;
  if (a.degree() < b.degree()) return {FPoly::zero(a.spec), rem};
  FPoly quot{a.spec, std::vector<std::uint64_t>(a.degree() - b.degree() + 1, 0)};
  const std::uint64_t lead_inv = a.spec.inv(b.leading());
  for (int d = a.degree(); d >= b.degree();) {
    std::uint64_t q = a.spec.mul(rem.c[d], lead_inv);
    quot.c[d - b.degree()] = q;
    if (q != 0) {
      for (int i = 0; i <= b.degree(); ++i) {
        const int k = d - b.degree() + i;
        rem.c[k] = a.spec.sub(rem.c[k], a.spec.mul(q, b.c[i]));
      }
    }
    rem.c.pop_back();
    while (!rem.c.empty() && rem.c.back() == 0) rem.c.pop_back();
    d = rem.degree();
  }
  quot.trim();
  return {quot, rem};
}

FPoly monic(const FPoly& a) {
  if (a.is_zero() || a.leading() == 1) return a;
  return scale(a, a.spec.inv(a.leading()));
}

FPoly gcd(FPoly a, FPoly b) {
  while (!b.is_zero()) {
    FPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

FPoly derivative(const FPoly& a) {
  if (a.degree() < 1) return FPoly::zero(a.spec);
  FPoly out{a.spec, std::vector<std::uint64_t>(a.c.size() - 1, 0)};
  const std::uint64_t p = a.spec.p();
  for (std::size_t i = 1; i < a.c.size(); ++i) out.c[i - 1] = a.spec.mul(a.c[i], i % p);
  out.trim();
  return out;
}

RationalFn RationalFn::from(const FPoly& num, const FPoly& den) {
  require_same_spec(num, den);
  if (den.is_zero()) fail(ErrorCode::DivisionByZeroFunction, "zero denominator");
  if (num.is_zero()) return RationalFn{FPoly::zero(num.spec), FPoly::constant(num.spec, 1)};
  FPoly g = gcd(num, den);
  FPoly n = divmod(num, g).first;
  FPoly d = divmod(den, g).first;
  const std::uint64_t lead_inv = num.spec.inv(d.leading());
  return RationalFn{scale(n, lead_inv), scale(d, lead_inv)};
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
  return from(num * o.den + o.num * den, den * o.den);
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
  return from(num * o.den - o.num * den, den * o.den);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
  return from(num * o.num, den * o.den);
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
  if (o.is_zero()) fail(ErrorCode::DivisionByZeroFunction, "division by the zero function");
  return from(num * o.den, den * o.num);
}

std::string RationalFn::to_string() const {
  if (is_polynomial()) return num.to_string();
  std::string n = num.to_string();
  std::string d = den.to_string();
  if (num.c.size() > 1 || n.find('+') != std::string::npos) n = "(" + n + ")";
  if (den.c.size() > 1 || d.find('+') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

namespace {

// Taylor shift: coefficients of f(x + b), by repeated synthetic division.
FPoly shift(const FPoly& f, std::uint64_t b) {
  if (f.is_zero()) return f;
  std::vector<std::uint64_t> work = f.c;
  std::vector<std::uint64_t> out(f.c.size(), 0);
  for (std::size_t k = 0; k < f.c.size(); ++k) {
    // Divide work by (x - b); remainder is the coefficient of u^k.
    std::uint64_t carry = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t v = f.spec.add(work[i], f.spec.mul(carry, b));
      work[i] = carry;
      carry = v;
    }
    out[k] = carry;
    if (!work.empty()) work.pop_back();
    if (work.empty()) break;
  }
  FPoly g{f.spec, std::move(out)};
  g.trim();
  return g;
}

// Power-series inverse of f mod u^n; f(0) must be nonzero.
FPoly series_inverse(const FPoly& f, std::int64_t n) {
  std::vector<std::uint64_t> inv(n, 0);
  const std::uint64_t c0_inv = f.spec.inv(f.coeff(0));
  inv[0] = c0_inv;
  for (std::int64_t k = 1; k < n; ++k) {
    std::uint64_t acc = 0;
    for (std::int64_t i = 1; i <= k; ++i)
      acc = f.spec.add(acc, f.spec.mul(f.coeff(std::size_t(i)), inv[k - i]));
    inv[k] = f.spec.mul(f.spec.neg(acc), c0_inv);
  }
  FPoly g{f.spec, std::move(inv)};
  g.trim();
  return g;
}

}  // namespace

RationalShape decompose(const RationalFn& f) {
  const FieldSpec& F = f.spec();
  RationalShape shape;
  auto [pp, rem] = divmod(f.num, f.den);
  shape.polynomial_part = pp;
  shape.infinity_pole_order = std::max(0, pp.degree());

  FPoly den = f.den;
  std::vector<std::pair<std::uint64_t, std::int64_t>> roots;  // (b, multiplicity)
  for (std::uint64_t b = 0; b < F.cardinality() && den.degree() > 0; ++b) {
    if (den.eval(b) != 0) continue;
    std::int64_t mult = 0;
    FPoly lin{F, {F.neg(b), 1}};
    while (true) {
      auto [q, r] = divmod(den, lin);
      if (!r.is_zero()) break;
      den = q;
      ++mult;
    }
    roots.emplace_back(b, mult);
  }
  if (den.degree() > 0)
    fail(ErrorCode::PoleNotRational,
         "denominator factor " + den.to_string() + " has no root in " + F.to_string());

  for (auto [b, e] : roots) {
    // f = pp + rem/den with den = (x-b)^e * d1, d1(b) != 0. The principal
    // part at b is the order-e head of the series rem(b+u)/d1(b+u).
    FPoly lin{F, {F.neg(b), 1}};
    FPoly d1 = divmod(f.den, poly_pow(lin, std::uint64_t(e))).first;
    FPoly series = shift(rem, b) * series_inverse(shift(d1, b), e);
    PolePart pole;
    pole.location = FieldElement(F, b);
    pole.order = e;
    pole.principal.reserve(e);
    for (std::int64_t i = 1; i <= e; ++i)
      pole.principal.emplace_back(F, series.coeff(std::size_t(e - i)));
    shape.finite_poles.push_back(std::move(pole));
  }
  std::sort(shape.finite_poles.begin(), shape.finite_poles.end(),
            [](const PolePart& a, const PolePart& b) {
              return a.location.packed() < b.location.packed();
            });
  return shape;
}

}  // namespace npcurve
