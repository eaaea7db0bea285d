#include "npcurve/construct.hpp"

#include <algorithm>
#include <map>

#include "npcurve/error.hpp"
#include "npcurve/npoly.hpp"
#include "npcurve/zeta.hpp"

namespace npcurve {

CKPPlan ckp_plan(std::uint64_t p, std::uint64_t delta) {
  if (!is_prime_u64(p))
    fail(ErrorCode::NonPrimeCharacteristic, "p = " + std::to_string(p));
  if (delta == 0) fail(ErrorCode::BadDigits, "delta must be positive");

  CKPPlan plan;
  plan.p = p;
  plan.delta = delta;

  // Base-p digits, all of which must be 0 or 1; collect maximal 1-runs.
  std::vector<int> digits;
  for (std::uint64_t d = delta; d != 0; d /= p) {
    const std::uint64_t digit = d % p;
    if (digit > 1)
      fail(ErrorCode::BadDigits, "base-" + std::to_string(p) + " digit " +
                                     std::to_string(digit) + " in delta = " +
                                     std::to_string(delta));
    digits.push_back(static_cast<int>(digit));
  }
  std::int64_t used = 0;  // sum of earlier run lengths
  for (std::size_t i = 0; i < digits.size();) {
    if (digits[i] == 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < digits.size() && digits[j] == 1) ++j;
    CKPRun run;
    run.start = static_cast<std::int64_t>(i);
    run.length = static_cast<std::int64_t>(j - i);
    run.u = run.start + 1 - used;
    used += run.length;
    if (!plan.runs.empty()) {
      const CKPRun& prev = plan.runs.back();
      // Maximal runs are separated by at least one zero digit, which forces
      // both the gap bound and strict growth of u.
      if (run.start < prev.start + prev.length + 1 || run.u <= prev.u)
        fail(ErrorCode::IdentityFailure, "run decomposition lost the gap invariant");
    }
    plan.runs.push_back(run);
    i = j;
  }

  const BigInt bp(p);
  plan.genus_target = BigInt(delta) * bp * (bp - 1) * (bp - 1) / 2;
  plan.base_degree = 1;
  BigInt total(0);
  BigInt earlier(1);  // prod_{j<i} p^{d_j}
  for (std::size_t i = 0; i < plan.runs.size(); ++i) {
    const CKPRun& run = plan.runs[i];
    CKPFactorClass cls;
    cls.run_index = i;
    const BigInt pd = big_pow(bp, static_cast<std::uint64_t>(run.length));
    cls.count = (pd - 1) * earlier;
    cls.genus_each = big_pow(bp, static_cast<std::uint64_t>(run.u)) * (bp - 1) / 2;
    total += cls.count * cls.genus_each;
    plan.inventory.push_back(std::move(cls));
    earlier *= pd;
    const BigInt len(run.length);
    plan.base_degree = plan.base_degree / boost::multiprecision::gcd(plan.base_degree, len) * len;
  }
  if (total != plan.genus_target)
    fail(ErrorCode::IdentityFailure,
         "factor genus sum " + to_string(total) + " misses the target " +
             to_string(plan.genus_target));
  return plan;
}

std::vector<CKPFactor> instantiate_factors(const CKPPlan& plan) {
  // Count of nonzero coefficient tuples and the top factor degree bound the
  // work; refuse (leaving the plan intact) rather than build gigabytes.
  BigInt count(1);
  for (const CKPRun& run : plan.runs)
    count *= big_pow(BigInt(plan.p), static_cast<std::uint64_t>(run.length));
  count -= 1;
  if (count > 4096)
    fail(ErrorCode::CapExceeded,
         "plan has " + to_string(count) + " factors; instantiation is capped at 4096");

  if (plan.base_degree > (std::uint64_t(1) << 20))
    fail(ErrorCode::CapExceeded, "base field degree " + to_string(plan.base_degree) +
                                     " is out of construction range");
  const auto degree = static_cast<std::uint32_t>(plan.base_degree);
  if (u64_pow_checked(plan.p, degree, std::uint64_t(1) << 32) > (std::uint64_t(1) << 32))
    fail(ErrorCode::CapExceeded, "base field exceeds the construction bound");
  const FieldSpec base = make_field(plan.p, degree);

  const std::int64_t u_max = plan.runs.back().u;
  const std::uint64_t top_degree =
      u64_pow_checked(plan.p, static_cast<std::uint32_t>(u_max), std::uint64_t(1) << 20);
  if (top_degree > (std::uint64_t(1) << 20))
    fail(ErrorCode::CapExceeded, "factor degree exceeds 2^20");
  if ((top_degree + 2) * static_cast<std::uint64_t>(count) > (std::uint64_t(1) << 22))
    fail(ErrorCode::CapExceeded, "combined factor storage exceeds the cap");

  // Per run: the embedded elements of the subfield F_{p^d} inside the base,
  // in canonical subfield order, and the monomial degree p^u + 1.
  std::vector<std::vector<std::uint64_t>> values;
  std::vector<std::size_t> degrees;
  for (const CKPRun& run : plan.runs) {
    const FieldSpec sub = make_field(plan.p, static_cast<std::uint32_t>(run.length));
    std::vector<std::uint64_t> embedded;
    embedded.reserve(sub.cardinality());
    for (std::uint64_t packed = 0; packed < sub.cardinality(); ++packed)
      embedded.push_back(embed(FieldElement(sub, packed), base).packed());
    values.push_back(std::move(embedded));
    degrees.push_back(static_cast<std::size_t>(
        u64_pow_checked(plan.p, static_cast<std::uint32_t>(run.u), std::uint64_t(1) << 20) + 1));
  }

  std::vector<CKPFactor> factors;
  std::vector<BigInt> per_run_count(plan.runs.size(), BigInt(0));
  BigInt genus_sum(0);
  std::vector<std::size_t> idx(plan.runs.size(), 0);  // odometer, first run fastest
  for (;;) {
    // Advance once first so the all-zero tuple is skipped.
    std::size_t carry = 0;
    while (carry < idx.size()) {
      if (++idx[carry] < values[carry].size()) break;
      idx[carry] = 0;
      ++carry;
    }
    if (carry == idx.size()) break;

    std::size_t top = 0;
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (idx[i] != 0) top = i;

    FPoly rhs = FPoly::zero(base);
    rhs.c.assign(degrees[top] + 1, 0);
    for (std::size_t i = 0; i <= top; ++i)
      if (idx[i] != 0) rhs.c[degrees[i]] = values[i][idx[i]];
    rhs.trim();

    CKPFactor factor;
    factor.curve = make_as(base, RationalFn::from_poly(rhs));
    factor.run_index = top;
    factor.expected_genus = plan.inventory[top].genus_each;
    validate(factor.curve);
    const std::int64_t gcomputed = genus(factor.curve);
    if (BigInt(gcomputed) != factor.expected_genus)
      fail(ErrorCode::IdentityFailure, "factor genus disagrees with the plan");
    genus_sum += gcomputed;
    per_run_count[top] += 1;
    factors.push_back(std::move(factor));
  }

  for (std::size_t i = 0; i < plan.runs.size(); ++i)
    if (per_run_count[i] != plan.inventory[i].count)
      fail(ErrorCode::IdentityFailure, "factor inventory mismatch");
  if (genus_sum != plan.genus_target)
    fail(ErrorCode::IdentityFailure, "instantiated genus sum misses the target");
  return factors;
}

VerifyReport verify_supersingular_factors(const std::vector<CKPFactor>& factors,
                                          const CountOptions& opts) {
  VerifyReport report;
  for (const CKPFactor& factor : factors) {
    FactorReport fr;
    fr.curve = factor.curve.to_string();
    fr.genus = genus(factor.curve);
    // The zeta computation enumerates F_{q^s} for s up to the genus; skip
    // the factor when the largest of those fields is out of range.
    const FieldSpec& base = factor.curve.base;
    const std::uint64_t limit = std::min(opts.cap, std::uint64_t(1) << 32);
    const std::uint64_t exp = base.r() * static_cast<std::uint64_t>(fr.genus);
    const std::uint64_t need =
        exp > 64 ? limit + 1
                 : u64_pow_checked(base.p(), static_cast<std::uint32_t>(exp), limit);
    if (need > limit) {
      fr.status = FactorStatus::SkippedCap;
      ++report.skipped;
    } else {
      const LPolynomial L = l_polynomial(factor.curve, opts);
      if (!is_supersingular(newton_polygon(L)))
        fail(ErrorCode::NonSupersingularFactor,
             "factor " + fr.curve + " is not supersingular");
      fr.status = FactorStatus::VerifiedSupersingular;
      ++report.verified;
    }
    report.factors.push_back(std::move(fr));
  }
  return report;
}

std::int64_t ds_p_rank(std::uint64_t h_order, std::int64_t f_z,
                       const std::vector<std::uint64_t>& ramification) {
  if (h_order < 2)
    fail(ErrorCode::InvalidCurveData, "group order must be a positive power of p");
  std::uint64_t p = h_order;
  for (std::uint64_t d = 2; d * d <= h_order; ++d)
    if (h_order % d == 0) {
      p = d;
      break;
    }
  for (std::uint64_t rest = h_order; rest != 1; rest /= p)
    if (rest % p != 0)
      fail(ErrorCode::InvalidCurveData, "group order is not a prime power");
  for (std::uint64_t e : ramification) {
    if (e == 0 || h_order % e != 0)
      fail(ErrorCode::InvalidCurveData, "ramification index must divide the group order");
    for (std::uint64_t rest = e; rest != 1; rest /= p)
      if (rest % p != 0)
        fail(ErrorCode::InvalidCurveData, "ramification index must be a power of p");
  }
  if (f_z < 0) fail(ErrorCode::InvalidCurveData, "base p-rank must be non-negative");

  BigInt fx = BigInt(h_order) * (BigInt(f_z) - 1) + 1;
  for (std::uint64_t e : ramification) fx += BigInt(e) - 1;
  if (fx < 0)
    fail(ErrorCode::NegativePRank, "branch data yields p-rank " + to_string(fx));
  return static_cast<std::int64_t>(fx);
}

IgusaCounts igusa_counts(std::uint64_t p, const CountOptions& opts) {
  if (p == 2) fail(ErrorCode::EvenCharacteristic, "the Legendre family needs odd p");
  if (!is_prime_u64(p)) fail(ErrorCode::NonPrimeCharacteristic, "p = " + std::to_string(p));
  if (u64_pow_checked(p, 2, opts.cap) > opts.cap)
    fail(ErrorCode::CapExceeded, "p^2 exceeds the enumeration cap");

  const FieldSpec F = make_field(p, 2);
  IgusaCounts out;
  out.p = p;

  const FieldElement one(F, 1);
  const FieldElement c256(F, 256 % p);
  std::vector<std::uint64_t> seen_j;
  for (std::uint64_t packed = 0; packed < F.cardinality(); ++packed) {
    if (packed == 0 || packed == 1) continue;
    const FieldElement lam(F, packed);
    const CurveSpec curve = make_legendre(lam);
    const BigInt n1 = n_points(curve, 1, opts);
    const BigInt a = BigInt(p) * p + 1 - n1;
    if (a % p != 0) continue;

    out.lambdas.push_back(lam);
    const FieldElement t = lam * lam - lam + one;
    const FieldElement num = t * t * t;
    const FieldElement lm1 = lam - one;
    const FieldElement den = lam * lam * lm1 * lm1;
    const FieldElement j = c256 * num / den;
    if (std::find(seen_j.begin(), seen_j.end(), j.packed()) == seen_j.end()) {
      seen_j.push_back(j.packed());
      out.j_invariants.push_back(j);
    }
  }
  out.lambda_count = static_cast<std::int64_t>(out.lambdas.size());
  out.iso_class_count = static_cast<std::int64_t>(out.j_invariants.size());
  return out;
}

const char* catalog_json() {
  // Embedded, versioned; the CLI emits it verbatim and the self-test
  // recomputes every expectation recorded here.
  static const char* const kCatalog = R"({
  "version": 1,
  "entries": [
    {
      "id": "hermitian-q2",
      "kind": "curve",
      "curve": "hermitian q=2",
      "genus": 1,
      "expect": {
        "supersingular": true,
        "l_polynomial": ["1", "0", "2"]
      }
    },
    {
      "id": "hermitian-q3",
      "kind": "curve",
      "curve": "hermitian q=3",
      "genus": 3,
      "expect": {
        "supersingular": true,
        "l_polynomial": ["1", "0", "9", "0", "27", "0", "27"]
      }
    },
    {
      "id": "hermitian-q4",
      "kind": "curve",
      "curve": "hermitian q=4",
      "genus": 6,
      "expect": {
        "supersingular": true,
        "l_polynomial": ["1", "0", "24", "0", "240", "0", "1280", "0", "3840", "0", "6144", "0", "4096"]
      }
    },
    {
      "id": "blache-1",
      "kind": "curve",
      "curve": "as p=2 q=2 f=x^23+x^21+x^17+x^7+x^5",
      "genus": 11,
      "expect": {
        "supersingular": false,
        "slopes": [[5, 11, 11], [6, 11, 11]]
      }
    },
    {
      "id": "blache-2",
      "kind": "curve",
      "curve": "as p=2 q=2 f=x^25+x^9",
      "genus": 12,
      "expect": {
        "supersingular": false,
        "slopes": [[5, 12, 12], [7, 12, 12]]
      }
    },
    {
      "id": "igusa-p3",
      "kind": "igusa",
      "p": 3,
      "expect": { "lambda_count": 1, "iso_class_count": 1 }
    },
    {
      "id": "igusa-p5",
      "kind": "igusa",
      "p": 5,
      "expect": { "lambda_count": 2, "iso_class_count": 1 }
    },
    {
      "id": "igusa-p7",
      "kind": "igusa",
      "p": 7,
      "expect": { "lambda_count": 3, "iso_class_count": 1 }
    },
    {
      "id": "igusa-p11",
      "kind": "igusa",
      "p": 11,
      "expect": { "lambda_count": 5, "iso_class_count": 2 }
    },
    {
      "id": "igusa-p13",
      "kind": "igusa",
      "p": 13,
      "expect": { "lambda_count": 6, "iso_class_count": 1 }
    },
    {
      "id": "elliptic-j0",
      "kind": "congruence",
      "f": "x^3+1",
      "rule": "supersingular exactly when p = 2 mod 3",
      "modulus": 3,
      "residue": 2,
      "supersingular_primes": [5, 11, 17],
      "ordinary_primes": [7, 13, 19]
    },
    {
      "id": "elliptic-j1728",
      "kind": "congruence",
      "f": "x^3+x",
      "rule": "supersingular exactly when p = 3 mod 4",
      "modulus": 4,
      "residue": 3,
      "supersingular_primes": [3, 7, 11, 19],
      "ordinary_primes": [5, 13, 17]
    }
  ]
}
)";
  return kCatalog;
}

}  // namespace npcurve
