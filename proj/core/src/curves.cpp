#include "npcurve/curves.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace npcurve {

namespace {

// Smallest prime factor; q must be a prime power p^h with h >= 1.
bool prime_power(std::uint64_t q, std::uint64_t& p, std::uint32_t& h) {
  if (q < 2) return false;
  std::uint64_t base = q;
  for (std::uint64_t d = 2; d * d <= base; ++d) {
    if (base % d == 0) {
      base = d;
      break;
    }
  }
  p = base;
  h = 0;
  while (q > 1) {
    if (q % p != 0) return false;
    q /= p;
    ++h;
  }
  return true;
}

const LinearizedASData* as_linearized(const CurveSpec& c) {
  return std::get_if<LinearizedASData>(&c.data);
}

// x^(p^h + 1) over the base field, the only right-hand side admitted when
// h > 1 and the Hermitian equation itself.
FPoly hermitian_rhs(const FieldSpec& base, std::uint32_t h) {
  std::uint64_t d = u64_pow_checked(base.p(), h, std::uint64_t(1) << 62);
  return FPoly::monomial(base, 1, std::size_t(d) + 1);
}

FPoly legendre_rhs(const FieldElement& lambda) {
  const FieldSpec& F = lambda.spec();
  std::uint64_t l = lambda.packed();
  // x(x-1)(x-lambda) = x^3 - (1+lambda)x^2 + lambda x
  return FPoly{F, {0, l, F.neg(F.add(1, l)), 1}};
}

}  // namespace

CurveFamily CurveSpec::family() const {
  if (std::holds_alternative<LinearizedASData>(data)) return CurveFamily::LinearizedAS;
  if (std::holds_alternative<HyperellipticData>(data)) return CurveFamily::Hyperelliptic;
  if (std::holds_alternative<HermitianData>(data)) return CurveFamily::Hermitian;
  return CurveFamily::Legendre;
}

std::string CurveSpec::to_string() const {
  std::ostringstream os;
  if (auto* lin = std::get_if<LinearizedASData>(&data)) {
    if (lin->h == 1) {
      os << "as p=" << base.p() << " q=" << base.cardinality() << " f=" << lin->f.to_string();
    } else {
      os << "lin h=" << lin->h << " q=" << base.cardinality();
    }
  } else if (auto* hyp = std::get_if<HyperellipticData>(&data)) {
    os << "hyp q=" << base.cardinality() << " f=" << hyp->f.to_string();
  } else if (auto* herm = std::get_if<HermitianData>(&data)) {
    os << "hermitian q=" << herm->q;
  } else {
    auto& leg = std::get<LegendreData>(data);
    os << "legendre p=" << base.p() << " lambda=" << leg.lambda.to_string();
  }
  return os.str();
}

CurveSpec make_as(const FieldSpec& base, const RationalFn& f) {
  return CurveSpec{base, LinearizedASData{1, f}};
}

CurveSpec make_linearized(std::uint32_t h, const FieldSpec& base) {
  return CurveSpec{base, LinearizedASData{h, RationalFn::from_poly(hermitian_rhs(base, h))}};
}

CurveSpec make_hermitian(std::uint64_t q) {
  std::uint64_t p;
  std::uint32_t h;
  if (!prime_power(q, p, h))
    fail(ErrorCode::InvalidCurveData, "hermitian q must be a prime power, got " + std::to_string(q));
  return CurveSpec{make_field(p, h), HermitianData{q}};
}

CurveSpec make_hyperelliptic(const FieldSpec& base, const FPoly& f) {
  return CurveSpec{base, HyperellipticData{f}};
}

CurveSpec make_legendre(const FieldElement& lambda) {
  return CurveSpec{lambda.spec(), LegendreData{lambda}};
}

void validate(const CurveSpec& curve) {
  const FieldSpec& F = curve.base;
  if (auto* lin = as_linearized(curve)) {
    if (lin->h < 1) fail(ErrorCode::UnsupportedLinearized, "h must be >= 1");
    if (!(lin->f.spec() == F)) fail(ErrorCode::FieldMismatch, "f not over the base field");
    if (lin->h > 1) {
      FPoly expect = hermitian_rhs(F, lin->h);
      if (!lin->f.is_polynomial() || !(lin->f.num == expect))
        fail(ErrorCode::UnsupportedLinearized,
             "h > 1 admits only f = x^(p^h+1); got f = " + lin->f.to_string());
      return;
    }
    if (lin->f.is_constant()) {
      std::uint64_t c = lin->f.num.is_zero() ? 0 : F.mul(lin->f.num.c[0], F.inv(lin->f.den.c[0]));
      if (trace_to_prime(FieldElement(F, c)) == 0)
        fail(ErrorCode::ReducibleCurve,
             "constant f with zero trace decomposes into disjoint lines");
      fail(ErrorCode::ReducibleCurve,
           "constant f yields a constant-field extension, not a curve over " + F.to_string());
    }
    RationalShape shape = decompose(lin->f);
    for (const PolePart& P : shape.finite_poles)
      if (P.order % std::int64_t(F.p()) == 0)
        fail(ErrorCode::WildPoleOrder, "pole at x=" + P.location.to_string() + " has order " +
                                           std::to_string(P.order) + " divisible by p");
    if (shape.infinity_pole_order > 0 && shape.infinity_pole_order % std::int64_t(F.p()) == 0)
      fail(ErrorCode::WildPoleOrder, "pole at infinity has order " +
                                         std::to_string(shape.infinity_pole_order) +
                                         " divisible by p");
    return;
  }
  if (auto* hyp = std::get_if<HyperellipticData>(&curve.data)) {
    if (F.p() == 2) fail(ErrorCode::EvenCharacteristic, "y^2 = f(x) needs odd characteristic");
    if (!(hyp->f.spec == F)) fail(ErrorCode::FieldMismatch, "f not over the base field");
    if (hyp->f.degree() < 1) fail(ErrorCode::InvalidCurveData, "f must be nonconstant");
    if (hyp->f.degree() % 2 == 0)
      fail(ErrorCode::EvenDegreeModel,
           "only odd-degree models are supported; degree " + std::to_string(hyp->f.degree()));
    FPoly g = gcd(hyp->f, derivative(hyp->f));
    if (g.degree() != 0)
      fail(ErrorCode::NotSquarefree, "gcd(f, f') = " + g.to_string());
    return;
  }
  if (auto* herm = std::get_if<HermitianData>(&curve.data)) {
    std::uint64_t p;
    std::uint32_t h;
    if (!prime_power(herm->q, p, h) || p != F.p() || F.cardinality() != herm->q)
      fail(ErrorCode::InvalidCurveData, "hermitian base field must be F_q");
    return;
  }
  auto& leg = std::get<LegendreData>(curve.data);
  if (F.p() == 2) fail(ErrorCode::EvenCharacteristic, "Legendre form needs odd characteristic");
  if (!(leg.lambda.spec() == F)) fail(ErrorCode::FieldMismatch, "lambda not in the base field");
  if (leg.lambda.packed() == 0 || leg.lambda.packed() == 1)
    fail(ErrorCode::DegenerateLambda, "lambda = " + leg.lambda.to_string());
}

std::int64_t genus(const CurveSpec& curve) {
  validate(curve);
  const FieldSpec& F = curve.base;
  if (auto* lin = as_linearized(curve)) {
    const std::uint64_t p = F.p();
    if (lin->h > 1) {
      std::int64_t ph = std::int64_t(u64_pow_checked(p, lin->h, std::uint64_t(1) << 31));
      return ph * (ph - 1) / 2;
    }
    RationalShape shape = decompose(lin->f);
    std::int64_t sum = 0;
    for (const PolePart& P : shape.finite_poles) sum += P.order + 1;
    if (shape.infinity_pole_order > 0) sum += shape.infinity_pole_order + 1;
    // (p-1)(sum-2) is even: p odd makes p-1 even; p = 2 forces every pole
    // order odd (tame), so each d_P + 1 is even.
    return std::int64_t(p - 1) * (sum - 2) / 2;
  }
  if (auto* hyp = std::get_if<HyperellipticData>(&curve.data))
    return (hyp->f.degree() - 1) / 2;
  if (auto* herm = std::get_if<HermitianData>(&curve.data))
    return std::int64_t(herm->q) * (std::int64_t(herm->q) - 1) / 2;
  return 1;  // Legendre
}

namespace {

struct AdditiveOp {
  std::uint32_t h = 1;
  bool plus = false;  // y^(p^h) + y for Hermitian-type, y^p - y for h = 1
};

// Everything needed to count points over E = F_{q^s}.
struct EmbeddedModel {
  FieldSpec E;
  std::vector<std::uint64_t> num, den;  // packed coefficients in E; den empty = 1
  AdditiveOp op;                        // linearized families
  bool square_model = false;            // hyperelliptic / Legendre
};

std::vector<std::uint64_t> embed_coeffs(const FPoly& f, const FieldSpec& E,
                                        const std::vector<std::uint64_t>& gen_powers) {
  const FieldSpec& B = f.spec;
  std::vector<std::uint64_t> out(f.c.size(), 0);
  std::vector<std::uint32_t> digits(B.r());
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (f.c[i] == 0) continue;
    if (f.c[i] < B.p()) {
      out[i] = f.c[i];
      continue;
    }
    B.unpack(f.c[i], digits.data());
    std::uint64_t acc = 0;
    for (std::uint32_t j = 0; j < B.r(); ++j)
      if (digits[j] != 0) acc = E.add(acc, E.mul(digits[j], gen_powers[j]));
    out[i] = acc;
  }
  return out;
}

EmbeddedModel build_model(const CurveSpec& curve, std::uint32_t s, const CountOptions& opts) {
  validate(curve);
  if (s < 1) fail(ErrorCode::InvalidCurveData, "extension index s must be >= 1");
  const FieldSpec& B = curve.base;
  std::uint64_t card = u64_pow_checked(B.p(), B.r() * s, opts.cap);
  if (card > opts.cap)
    fail(ErrorCode::CapExceeded, "q^s exceeds the enumeration cap for s = " + std::to_string(s));
  EmbeddedModel m;
  m.E = make_field(B.p(), B.r() * s);
  std::vector<std::uint64_t> gen_powers;
  auto powers = [&]() -> const std::vector<std::uint64_t>& {
    if (gen_powers.empty()) gen_powers = embedding_generator_powers(B, m.E);
    return gen_powers;
  };
  if (auto* lin = as_linearized(curve)) {
    m.op = AdditiveOp{lin->h, lin->h > 1};
    m.num = embed_coeffs(lin->f.num, m.E, powers());
    if (lin->f.den.degree() > 0) m.den = embed_coeffs(lin->f.den, m.E, powers());
  } else if (auto* hyp = std::get_if<HyperellipticData>(&curve.data)) {
    m.square_model = true;
    m.num = embed_coeffs(hyp->f, m.E, powers());
  } else if (auto* herm = std::get_if<HermitianData>(&curve.data)) {
    std::uint32_t h = 0;
    std::uint64_t p;
    prime_power(herm->q, p, h);
    m.op = AdditiveOp{h, true};
    m.num = embed_coeffs(hermitian_rhs(B, h), m.E, powers());
  } else {
    auto& leg = std::get<LegendreData>(curve.data);
    m.square_model = true;
    m.num = embed_coeffs(legendre_rhs(leg.lambda), m.E, powers());
  }
  return m;
}

std::uint64_t horner(const FieldSpec& E, const std::vector<std::uint64_t>& c, std::uint64_t x) {
  std::uint64_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = E.add(E.mul(acc, x), c[i]);
  return acc;
}

struct ImageTable {
  std::uint64_t kappa = 0;
  std::vector<std::uint64_t> bits;
  bool contains(std::uint64_t v) const { return (bits[v >> 6] >> (v & 63)) & 1; }
};

// Kernel size and image set of the additive map A over E.
ImageTable additive_image(const FieldSpec& E, const AdditiveOp& op) {
  const std::uint64_t n = E.cardinality();
  ImageTable t;
  t.bits.assign((n + 63) / 64, 0);
  for (std::uint64_t y = 0; y < n; ++y) {
    std::uint64_t a = E.frobenius(y, op.h);
    a = op.plus ? E.add(a, y) : E.sub(a, y);
    if (a == 0) ++t.kappa;
    t.bits[a >> 6] |= std::uint64_t(1) << (a & 63);
  }
  return t;
}

// Splits [0, n) into chunks, sums f(chunk) over all of them. Results do not
// depend on the partition.
template <typename Fn>
std::uint64_t parallel_range_sum(std::uint64_t n, std::uint32_t threads, Fn&& chunk_count) {
  threads = std::max<std::uint32_t>(1, threads);
  if (threads == 1 || n < (std::uint64_t(1) << 16)) return chunk_count(std::uint64_t(0), n);
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  const std::uint64_t step = (n + threads - 1) / threads;
  for (std::uint32_t t = 0; t < threads; ++t) {
    const std::uint64_t lo = std::min(n, t * step), hi = std::min(n, lo + step);
    pool.emplace_back([&, t, lo, hi]() { partial[t] = chunk_count(lo, hi); });
  }
  for (auto& th : pool) th.join();
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

struct CountBreakdown {
  std::uint64_t affine = 0;          // solutions (x, y) with f defined at x
  std::uint64_t ramified_finite = 0; // one place above each finite pole of f
  std::uint64_t at_infinity = 0;
};

CountBreakdown count_model(const CurveSpec& curve, std::uint32_t s, const CountOptions& opts) {
  EmbeddedModel m = build_model(curve, s, opts);
  const FieldSpec& E = m.E;
  const std::uint64_t n = E.cardinality();
  CountBreakdown out;

  if (m.square_model) {
    // Nonzero squares as a bitmap: y^2 = u has 2 solutions when the bit is
    // set, 1 when u = 0, none otherwise (odd characteristic).
    std::vector<std::uint64_t> qr((n + 63) / 64, 0);
    for (std::uint64_t y = 1; y < n; ++y) {
      std::uint64_t u = E.mul(y, y);
      qr[u >> 6] |= std::uint64_t(1) << (u & 63);
    }
    out.affine = parallel_range_sum(n, opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
      std::uint64_t acc = 0;
      for (std::uint64_t x = lo; x < hi; ++x) {
        std::uint64_t u = horner(E, m.num, x);
        if (u == 0)
          acc += 1;
        else if ((qr[u >> 6] >> (u & 63)) & 1)
          acc += 2;
      }
      return acc;
    });
    out.at_infinity = 1;  // odd-degree model: one point on the smooth model
    return out;
  }

  ImageTable image = additive_image(E, m.op);
  if (m.den.empty()) {
    out.affine = parallel_range_sum(n, opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
      std::uint64_t acc = 0;
      for (std::uint64_t x = lo; x < hi; ++x)
        if (image.contains(horner(E, m.num, x))) acc += image.kappa;
      return acc;
    });
  } else {
    // Rational f: evaluate num/den with one batched inversion pass.
    std::vector<std::uint64_t> dvals(n);
    for (std::uint64_t x = 0; x < n; ++x) {
      dvals[x] = horner(E, m.den, x);
      // Pole orders are coprime to p, so the cover is totally ramified there:
      // exactly one point of the smooth model sits above each pole of f.
      if (dvals[x] == 0) ++out.ramified_finite;
    }
    std::vector<std::uint64_t> prefix;
    prefix.reserve(n + 1);
    prefix.push_back(1);
    for (std::uint64_t x = 0; x < n; ++x)
      prefix.push_back(dvals[x] == 0 ? prefix.back() : E.mul(prefix.back(), dvals[x]));
    std::uint64_t inv_all = E.inv(prefix.back());
    std::vector<std::uint64_t> dinv(n, 0);
    for (std::uint64_t x = n; x-- > 0;) {
      if (dvals[x] == 0) continue;
      dinv[x] = E.mul(inv_all, prefix[x]);
      inv_all = E.mul(inv_all, dvals[x]);
    }
    out.affine = parallel_range_sum(n, opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
      std::uint64_t acc = 0;
      for (std::uint64_t x = lo; x < hi; ++x) {
        if (dvals[x] == 0) continue;  // pole of f: no affine point
        std::uint64_t u = E.mul(horner(E, m.num, x), dinv[x]);
        if (image.contains(u)) acc += image.kappa;
      }
      return acc;
    });
  }

  const int dn = int(m.num.size()) - 1;
  const int dd = m.den.empty() ? 0 : int(m.den.size()) - 1;
  if (dn > dd) {
    out.at_infinity = 1;  // totally ramified above the pole at infinity
  } else {
    std::uint64_t v_inf =
        dn < dd ? 0 : E.mul(m.num.back(), E.inv(m.den.empty() ? 1 : m.den.back()));
    out.at_infinity = image.contains(v_inf) ? image.kappa : 0;
  }
  return out;
}

}  // namespace

std::uint64_t affine_count(const CurveSpec& curve, std::uint32_t s, const CountOptions& opts) {
  return count_model(curve, s, opts).affine;
}

std::uint64_t points_at_infinity(const CurveSpec& curve, std::uint32_t s,
                                 const CountOptions& opts) {
  if (curve.family() == CurveFamily::Hyperelliptic || curve.family() == CurveFamily::Legendre) {
    validate(curve);
    return 1;
  }
  EmbeddedModel m = build_model(curve, s, opts);
  const int dn = int(m.num.size()) - 1;
  const int dd = m.den.empty() ? 0 : int(m.den.size()) - 1;
  if (dn > dd) return 1;
  const FieldSpec& E = m.E;
  std::uint64_t v_inf = dn < dd ? 0 : E.mul(m.num.back(), E.inv(m.den.empty() ? 1 : m.den.back()));
  ImageTable image = additive_image(E, m.op);
  return image.contains(v_inf) ? image.kappa : 0;
}

std::uint64_t n_points(const CurveSpec& curve, std::uint32_t s, const CountOptions& opts) {
  CountBreakdown b = count_model(curve, s, opts);
  return b.affine + b.ramified_finite + b.at_infinity;
}

}  // namespace npcurve
