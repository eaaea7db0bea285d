#include "npcurve/ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace npcurve {

namespace {

constexpr std::uint64_t kMaxCharacteristic = std::uint64_t(1) << 26;
constexpr std::uint64_t kMaxConstructCard = std::uint64_t(1) << 32;

// Dense polynomials over F_p on uint32 digit vectors, used only for the
// modulus search. coeffs[i] is the x^i coefficient; no trailing zeros.
using PPoly = std::vector<std::uint32_t>;

int ppoly_deg(const PPoly& f) { return int(f.size()) - 1; }

// Remainder of monic-capable division: divides f by monic g in place.
bool ppoly_divisible(const PPoly& f, const PPoly& g, std::uint64_t p) {
  PPoly rem = f;
  const int dg = ppoly_deg(g);
  while (int(rem.size()) - 1 >= dg) {
    std::uint64_t lead = rem.back();
    if (lead != 0) {
      const std::size_t shift = rem.size() - 1 - dg;
      for (int i = 0; i <= dg; ++i) {
        std::uint64_t v = rem[shift + i] + p - (lead * g[i]) % p;
        rem[shift + i] = std::uint32_t(v % p);
      }
    }
    rem.pop_back();
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (int(rem.size()) - 1 < dg) break;
  }
  return rem.empty();
}

// Monic polynomial of degree d whose coefficient tuple reads as `index`
// base p (constant digit first).
PPoly monic_from_index(std::uint64_t index, int d, std::uint64_t p) {
  PPoly f(d + 1, 0);
  for (int i = 0; i < d; ++i) {
    f[i] = std::uint32_t(index % p);
    index /= p;
  }
  f[d] = 1;
  return f;
}

// Monic irreducibles of degree <= max_deg, built degree by degree: a monic is
// irreducible iff no lower-degree monic irreducible of degree <= deg/2
// divides it. Verdict agrees with trial division over all lower monics.
std::vector<PPoly> irreducibles_up_to(std::uint64_t p, int max_deg) {
  std::vector<PPoly> irr;
  for (int d = 1; d <= max_deg; ++d) {
    std::uint64_t count = u64_pow_checked(p, d, kMaxConstructCard);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      PPoly f = monic_from_index(idx, d, p);
      bool composite = false;
      for (const PPoly& g : irr) {
        if (2 * ppoly_deg(g) > d) break;
        if (ppoly_divisible(f, g, p)) {
          composite = true;
          break;
        }
      }
      if (!composite) irr.push_back(std::move(f));
    }
  }
  return irr;
}

// Least monic irreducible of degree r in canonical (base-p tuple) order.
PPoly least_irreducible(std::uint64_t p, std::uint32_t r) {
  if (r == 1) return PPoly{0, 1};  // x itself
  std::vector<PPoly> divisors = irreducibles_up_to(p, int(r) / 2);
  std::uint64_t count = u64_pow_checked(p, r, kMaxConstructCard);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    PPoly f = monic_from_index(idx, int(r), p);
    bool composite = false;
    for (const PPoly& g : divisors) {
      if (ppoly_divisible(f, g, p)) {
        composite = true;
        break;
      }
    }
    if (!composite) return f;
  }
  fail(ErrorCode::InvalidCurveData, "no irreducible polynomial found (unreachable)");
}

std::string term_string(std::uint64_t c, int degree) {
  std::ostringstream os;
  if (degree == 0) {
    os << c;
  } else {
    if (c != 1) os << c << "*";
    os << "t";
    if (degree > 1) os << "^" << degree;
  }
  return os.str();
}

std::string poly_in_t(const std::vector<std::uint32_t>& low, bool monic_top, int top_degree) {
  std::string out;
  for (int i = 0; i < int(low.size()); ++i) {
    if (low[i] == 0) continue;
    if (!out.empty()) out += "+";
    out += term_string(low[i], i);
  }
  if (monic_top) {
    if (!out.empty()) out += "+";
    out += term_string(1, top_degree);
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace

FieldSpec make_field(std::uint64_t p, std::uint32_t r) {
  if (r == 0) fail(ErrorCode::ZeroExtensionDegree, "extension degree must be positive");
  if (p > kMaxCharacteristic)
    fail(ErrorCode::CharacteristicTooLarge, "characteristic above 2^26 is unsupported");
  if (!is_prime_u64(p)) fail(ErrorCode::NonPrimeCharacteristic, "p = " + std::to_string(p));
  std::uint64_t card = u64_pow_checked(p, r, kMaxConstructCard);
  if (card > kMaxConstructCard)
    fail(ErrorCode::CapExceeded, "field cardinality above 2^32 cannot be constructed");

  struct Key {
    std::uint64_t p;
    std::uint32_t r;
    bool operator<(const Key& o) const { return p != o.p ? p < o.p : r < o.r; }
  };
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const FieldSpec::Data>>* registry =
      new std::map<Key, std::shared_ptr<const FieldSpec::Data>>();

  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry->find(Key{p, r});
    if (it != registry->end()) return FieldSpec(it->second);
  }
  // Search outside the lock; duplicate work on a race is harmless because the
  // result is deterministic.
  PPoly m = least_irreducible(p, r);
  auto data = std::make_shared<FieldSpec::Data>();
  data->p = p;
  data->r = r;
  data->card = card;
  data->mod.assign(m.begin(), m.end() - 1);  // drop the monic top coefficient
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = registry->emplace(Key{p, r}, data);
  return FieldSpec(it->second);
}

void FieldSpec::unpack(std::uint64_t a, std::uint32_t* digits) const {
  const std::uint64_t p = d_->p;
  for (std::uint32_t i = 0; i < d_->r; ++i) {
    digits[i] = std::uint32_t(a % p);
    a /= p;
  }
}

std::uint64_t FieldSpec::pack(const std::uint32_t* digits) const {
  const std::uint64_t p = d_->p;
  std::uint64_t a = 0;
  for (std::uint32_t i = d_->r; i-- > 0;) a = a * p + digits[i];
  return a;
}

namespace {
constexpr std::uint32_t kMaxDigits = 64;
}

std::uint64_t FieldSpec::add(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t p = d_->p;
  std::uint32_t da[kMaxDigits], db[kMaxDigits];
  unpack(a, da);
  unpack(b, db);
  for (std::uint32_t i = 0; i < d_->r; ++i) {
    da[i] += db[i];
    if (da[i] >= p) da[i] -= std::uint32_t(p);
  }
  return pack(da);
}

std::uint64_t FieldSpec::sub(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t p = d_->p;
  std::uint32_t da[kMaxDigits], db[kMaxDigits];
  unpack(a, da);
  unpack(b, db);
  for (std::uint32_t i = 0; i < d_->r; ++i) {
    da[i] = (da[i] >= db[i]) ? da[i] - db[i] : std::uint32_t(da[i] + p - db[i]);
  }
  return pack(da);
}

std::uint64_t FieldSpec::neg(std::uint64_t a) const { return sub(0, a); }

std::uint64_t FieldSpec::mul(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t p = d_->p;
  const std::uint32_t r = d_->r;
  if (r == 1) return (a * b) % p;
  std::uint32_t da[kMaxDigits], db[kMaxDigits];
  unpack(a, da);
  unpack(b, db);
  std::uint64_t acc[2 * kMaxDigits] = {0};
  for (std::uint32_t i = 0; i < r; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < r; ++j) acc[i + j] += std::uint64_t(da[i]) * db[j];
  }
  for (std::uint32_t k = 0; k < 2 * r - 1; ++k) acc[k] %= p;
  // x^r = -mod(x): fold the high part down, keeping everything nonnegative.
  const std::vector<std::uint32_t>& m = d_->mod;
  for (std::uint32_t k = 2 * r - 2; k >= r; --k) {
    std::uint64_t c = acc[k] % p;
    if (c) {
      for (std::uint32_t j = 0; j < r; ++j) acc[k - r + j] += c * (p - m[j]);
    }
    if (k == r) break;
  }
  std::uint32_t out[kMaxDigits];
  for (std::uint32_t j = 0; j < r; ++j) out[j] = std::uint32_t(acc[j] % p);
  return pack(out);
}

std::uint64_t FieldSpec::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t acc = 1;
  std::uint64_t b = a;
  while (e) {
    if (e & 1) acc = mul(acc, b);
    b = mul(b, b);
    e >>= 1;
  }
  return acc;
}

std::uint64_t FieldSpec::inv(std::uint64_t a) const {
  if (a == 0) fail(ErrorCode::NotInvertible, "zero has no inverse in " + to_string());
  return pow(a, d_->card - 2);
}

std::uint64_t FieldSpec::frobenius(std::uint64_t a, std::uint32_t h) const {
  std::uint64_t x = a;
  for (std::uint32_t i = 0; i < h; ++i) x = pow(x, d_->p);
  return x;
}

std::string FieldSpec::to_string() const {
  std::ostringstream os;
  if (d_->r == 1) {
    os << "GF(" << d_->p << ")";
  } else {
    os << "GF(" << d_->p << "^" << d_->r << "; modulus=" << poly_in_t(d_->mod, true, int(d_->r))
       << ")";
  }
  return os.str();
}

std::vector<std::uint32_t> FieldElement::digits() const {
  std::vector<std::uint32_t> d(spec_.r());
  spec_.unpack(packed_, d.data());
  return d;
}

namespace {
void require_same_spec(const FieldElement& a, const FieldElement& b) {
  if (a.spec() != b.spec())
    fail(ErrorCode::FieldMismatch, a.spec().to_string() + " vs " + b.spec().to_string());
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_spec(*this, o);
  return FieldElement(spec_, spec_.add(packed_, o.packed_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_spec(*this, o);
  return FieldElement(spec_, spec_.sub(packed_, o.packed_));
}

FieldElement FieldElement::operator-() const { return FieldElement(spec_, spec_.neg(packed_)); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_spec(*this, o);
  return FieldElement(spec_, spec_.mul(packed_, o.packed_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_spec(*this, o);
  return FieldElement(spec_, spec_.mul(packed_, spec_.inv(o.packed_)));
}

bool FieldElement::operator==(const FieldElement& o) const {
  return spec_ == o.spec_ && packed_ == o.packed_;
}

bool FieldElement::operator<(const FieldElement& o) const {
  require_same_spec(*this, o);
  return packed_ < o.packed_;
}

std::string FieldElement::to_string() const {
  auto d = digits();
  return poly_in_t(d, false, 0);
}

std::uint64_t trace_to_prime(const FieldElement& x) {
  const FieldSpec& F = x.spec();
  std::uint64_t acc = x.packed();
  std::uint64_t y = x.packed();
  for (std::uint32_t i = 1; i < F.r(); ++i) {
    y = F.frobenius(y);
    acc = F.add(acc, y);
  }
  // The trace is Frobenius-fixed, hence a prime-field constant.
  return acc;
}

std::vector<std::uint64_t> enumerate_packed(const FieldSpec& spec, const CountOptions& opts) {
  if (spec.cardinality() > opts.cap)
    fail(ErrorCode::CapExceeded, spec.to_string() + " exceeds the enumeration cap");
  std::vector<std::uint64_t> out(spec.cardinality());
  for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::vector<FieldElement> enumerate(const FieldSpec& spec, const CountOptions& opts) {
  if (spec.cardinality() > opts.cap)
    fail(ErrorCode::CapExceeded, spec.to_string() + " exceeds the enumeration cap");
  std::vector<FieldElement> out;
  out.reserve(spec.cardinality());
  for (std::uint64_t i = 0; i < spec.cardinality(); ++i) out.emplace_back(spec, i);
  return out;
}

NormFiberReport norm_to_subfield_count(const FieldSpec& ext, const CountOptions& opts) {
  if (ext.r() % 2 != 0)
    fail(ErrorCode::NotQuadraticExtension, ext.to_string() + " is not a quadratic extension");
  if (ext.cardinality() > opts.cap)
    fail(ErrorCode::CapExceeded, ext.to_string() + " exceeds the enumeration cap");
  const std::uint64_t q = u64_pow_checked(ext.p(), ext.r() / 2, ext.cardinality());
  std::map<std::uint64_t, std::uint64_t> fibers;
  for (std::uint64_t x = 1; x < ext.cardinality(); ++x) {
    std::uint64_t n = ext.mul(ext.frobenius(x, ext.r() / 2), x);  // x^(q+1) = x^q * x
    ++fibers[n];
  }
  NormFiberReport report;
  report.q = q;
  for (auto& [value, count] : fibers) report.fibers.emplace_back(FieldElement(ext, value), count);
  return report;
}

std::vector<std::uint64_t> embedding_generator_powers(const FieldSpec& src, const FieldSpec& dst) {
  if (src.p() != dst.p() || dst.r() % src.r() != 0)
    fail(ErrorCode::FieldMismatch,
         "no embedding of " + src.to_string() + " into " + dst.to_string());
  auto powers_of = [&](std::uint64_t gen_image) {
    std::vector<std::uint64_t> powers(src.r());
    std::uint64_t acc = 1;
    for (std::uint32_t i = 0; i < src.r(); ++i) {
      powers[i] = acc;
      acc = dst.mul(acc, gen_image);
    }
    return powers;
  };
  if (src.r() == 1) return powers_of(1);
  if (src == dst) return powers_of(src.p());  // packed form of t

  struct Key {
    std::uint64_t p;
    std::uint32_t rs, rd;
    bool operator<(const Key& o) const {
      if (p != o.p) return p < o.p;
      if (rs != o.rs) return rs < o.rs;
      return rd < o.rd;
    }
  };
  static std::mutex mu;
  static std::map<Key, std::uint64_t>* cache = new std::map<Key, std::uint64_t>();
  std::uint64_t gen_image = 0;
  bool have = false;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache->find(Key{src.p(), src.r(), dst.r()});
    if (it != cache->end()) {
      gen_image = it->second;
      have = true;
    }
  }
  if (!have) {
    // First root, in canonical order, of the source modulus in the target.
    // Modulus coefficients are prime-field constants, so they pack as-is.
    const auto& m = src.modulus();
    for (std::uint64_t cand = 0; cand < dst.cardinality(); ++cand) {
      std::uint64_t acc = 1;  // monic leading coefficient
      for (std::uint32_t i = src.r(); i-- > 0;) acc = dst.add(dst.mul(acc, cand), m[i]);
      if (acc == 0) {
        gen_image = cand;
        have = true;
        break;
      }
    }
    if (!have)
      fail(ErrorCode::FieldMismatch, "source modulus has no root in " + dst.to_string());
    std::lock_guard<std::mutex> lock(mu);
    cache->emplace(Key{src.p(), src.r(), dst.r()}, gen_image);
  }
  return powers_of(gen_image);
}

FieldElement embed(const FieldElement& x, const FieldSpec& target) {
  const FieldSpec& src = x.spec();
  if (src == target) return x;
  if (x.in_prime_field()) {
    if (src.p() != target.p() || target.r() % src.r() != 0)
      fail(ErrorCode::FieldMismatch,
           "no embedding of " + src.to_string() + " into " + target.to_string());
    return FieldElement(target, x.packed());
  }
  auto powers = embedding_generator_powers(src, target);
  auto d = x.digits();
  std::uint64_t acc = 0;
  for (std::uint32_t i = 0; i < src.r(); ++i) {
    if (d[i] == 0) continue;
    acc = target.add(acc, target.mul(d[i], powers[i]));
  }
  return FieldElement(target, acc);
}

}  // namespace npcurve
