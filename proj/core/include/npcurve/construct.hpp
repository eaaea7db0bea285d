#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "npcurve/curves.hpp"
#include "npcurve/numeric.hpp"
#include "npcurve/options.hpp"

namespace npcurve {

// One maximal block of 1-digits in the base-p expansion of delta, digits
// indexed from 0: the block covers exponents start..start+length-1.
struct CKPRun {
  std::int64_t start = 0;
  std::int64_t length = 0;  // d_i
  std::int64_t u = 0;       // (start+1) - sum of earlier lengths; strictly increasing
};

// Inventory line for the factors whose top coefficient comes from run i:
// count = (p^{d_i} - 1) * prod_{j<i} p^{d_j}, each of genus p^{u_i}(p-1)/2.
struct CKPFactorClass {
  std::size_t run_index = 0;  // 0-based into runs
  BigInt count;
  BigInt genus_each;
};

struct CKPPlan {
  std::uint64_t p = 0;
  std::uint64_t delta = 0;
  std::vector<CKPRun> runs;
  std::vector<CKPFactorClass> inventory;
  BigInt genus_target;  // delta * p * (p-1)^2 / 2
  BigInt base_degree;   // lcm of run lengths: the factors live over F_{p^base_degree}
};

// Decomposes delta base p into 1-runs and checks the genus bookkeeping
// identity sum(count_i * genus_i) = delta * p(p-1)^2/2 exactly.
// Errors: NonPrimeCharacteristic; BadDigits (delta = 0 or a digit >= 2);
// IdentityFailure (internal arithmetic bug).
CKPPlan ckp_plan(std::uint64_t p, std::uint64_t delta);

struct CKPFactor {
  CurveSpec curve;            // y^p - y = x * f(x), f additive
  std::size_t run_index = 0;  // run carrying the top coefficient
  BigInt expected_genus;
};

// Enumerates every nonzero f = sum_i c_i x^(p^(u_i)) with c_i ranging over
// the subfield F_{p^(d_i)} of F_{p^L}, L = lcm(d_i), and emits the curves
// y^p - y = x*f(x) over F_{p^L}. Factor counts per run are re-checked
// against the plan inventory, and the genus sum against genus_target.
// Errors: CapExceeded when the base field, the factor count (> 4096), or a
// factor degree (> 2^20) is out of reach; the plan itself stays valid.
std::vector<CKPFactor> instantiate_factors(const CKPPlan& plan);

enum class FactorStatus { VerifiedSupersingular, SkippedCap };

struct FactorReport {
  FactorStatus status = FactorStatus::SkippedCap;
  std::int64_t genus = 0;
  std::string curve;  // grammar form
};

struct VerifyReport {
  std::vector<FactorReport> factors;
  std::size_t verified = 0;
  std::size_t skipped = 0;
};

// Computes the zeta function of each factor whose counting fields fit under
// opts.cap and asserts a pure slope-1/2 Newton polygon; factors beyond the
// cap are reported as skipped. Errors: NonSupersingularFactor (a verified
// factor with a different polygon would falsify the construction).
VerifyReport verify_supersingular_factors(const std::vector<CKPFactor>& factors,
                                          const CountOptions& opts = {});

// Deuring-Shafarevich: for a Galois cover X -> Z of p-group order |H| with
// ramification indices e_x over the branch points,
//   f_X = |H| (f_Z - 1) + sum (e_x - 1) + 1.
// Errors: InvalidCurveData (|H| not a prime power, or some e_x not a p-power
// dividing |H|); NegativePRank when the branch data is inconsistent.
std::int64_t ds_p_rank(std::uint64_t h_order, std::int64_t f_z,
                       const std::vector<std::uint64_t>& ramification);

struct IgusaCounts {
  std::uint64_t p = 0;
  std::int64_t lambda_count = 0;     // always (p-1)/2
  std::int64_t iso_class_count = 0;  // distinct j among supersingular lambda
  std::vector<FieldElement> lambdas;
  std::vector<FieldElement> j_invariants;  // distinct, first-found order
};

// Enumerates lambda in F_{p^2} minus {0,1}, keeps those with p | trace of
// Frobenius for y^2 = x(x-1)(x-lambda) over F_{p^2}, and groups them by
// j = 256 (lambda^2-lambda+1)^3 / (lambda^2 (lambda-1)^2).
// Errors: EvenCharacteristic; NonPrimeCharacteristic; CapExceeded.
IgusaCounts igusa_counts(std::uint64_t p, const CountOptions& opts = {});

// Embedded machine-readable list of known curves and facts with their
// expected invariants (versioned JSON text).
const char* catalog_json();

}  // namespace npcurve
