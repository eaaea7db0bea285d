#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "npcurve/error.hpp"
#include "npcurve/numeric.hpp"
#include "npcurve/options.hpp"

namespace npcurve {

// F_{p^r} = F_p[t]/(m(t)) with m the least monic irreducible of degree r,
// least in the ordering that reads the coefficient tuple (c_0,...,c_{r-1})
// as a base-p integer. Elements are coefficient vectors over F_p; the packed
// form of an element is that same base-p integer, so packed order is the
// canonical enumeration order.
//
// Specs are interned: make_field(p, r) always returns a handle to the same
// immutable data, and the modulus is deterministic given (p, r).
class FieldSpec {
 public:
  FieldSpec() = default;

  std::uint64_t p() const { return d_->p; }
  std::uint32_t r() const { return d_->r; }
  std::uint64_t cardinality() const { return d_->card; }
  // Modulus digits c_0..c_{r-1}; the polynomial is x^r + sum c_i x^i.
  const std::vector<std::uint32_t>& modulus() const { return d_->mod; }

  bool valid() const { return d_ != nullptr; }
  bool operator==(const FieldSpec& o) const { return d_ == o.d_; }
  bool operator!=(const FieldSpec& o) const { return d_ != o.d_; }

  // Packed-element arithmetic. Thread-safe, allocation-free.
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;  // errors: NotInvertible on 0
  // h-fold Frobenius x -> x^(p^h).
  std::uint64_t frobenius(std::uint64_t a, std::uint32_t h = 1) const;

  void unpack(std::uint64_t a, std::uint32_t* digits) const;  // digits[0..r-1]
  std::uint64_t pack(const std::uint32_t* digits) const;

  std::string to_string() const;

 private:
  struct Data {
    std::uint64_t p = 0;
    std::uint32_t r = 0;
    std::uint64_t card = 0;
    std::vector<std::uint32_t> mod;
  };
  explicit FieldSpec(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;

  friend FieldSpec make_field(std::uint64_t, std::uint32_t);
};

// Errors: NonPrimeCharacteristic, ZeroExtensionDegree, CharacteristicTooLarge
// (construction is bounded at p <= 2^26 and p^r <= 2^32; enumeration has its
// own configurable cap beneath that).
FieldSpec make_field(std::uint64_t p, std::uint32_t r);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldSpec spec, std::uint64_t packed) : spec_(std::move(spec)), packed_(packed) {}

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t packed() const { return packed_; }
  std::vector<std::uint32_t> digits() const;
  bool is_zero() const { return packed_ == 0; }
  // True when the element lies in the prime field (all higher digits zero).
  bool in_prime_field() const { return packed_ < spec_.p(); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  bool operator<(const FieldElement& o) const;  // canonical (packed) order

  std::string to_string() const;  // "0", "2", "1+t", "2+t^2", ...

 private:
  FieldSpec spec_;
  std::uint64_t packed_ = 0;
};

// Tr(x) = x + x^p + ... + x^(p^(r-1)), landing in F_p (returned as residue).
std::uint64_t trace_to_prime(const FieldElement& x);

// Canonical enumeration: packed indices 0..p^r-1 in order.
// Errors: CapExceeded when p^r exceeds opts.cap.
std::vector<std::uint64_t> enumerate_packed(const FieldSpec& spec, const CountOptions& opts = {});
std::vector<FieldElement> enumerate(const FieldSpec& spec, const CountOptions& opts = {});

// Fiber structure of the norm map N(x) = x^(q+1) from F_{q^2}* onto F_q*,
// where the input spec is F_{q^2}. Every fiber has size exactly q+1 and
// there are q-1 of them; callers assert, this reports.
struct NormFiberReport {
  std::uint64_t q = 0;
  // (norm value, preimage count), sorted by packed norm value. Norm values
  // are elements of the subfield F_q inside F_{q^2}.
  std::vector<std::pair<FieldElement, std::uint64_t>> fibers;
};
NormFiberReport norm_to_subfield_count(const FieldSpec& quadratic_ext, const CountOptions& opts = {});

// Maps F_{p^r} into F_{p^(r*s)} by sending the generator to the first root
// (in canonical element order) of the source modulus in the target; the
// choice is deterministic and cached. Prime-field constants map directly.
// Errors: FieldMismatch unless char matches and source degree divides target.
FieldElement embed(const FieldElement& x, const FieldSpec& target);

// Packed form of embed for counting kernels: image of the source generator's
// powers 1, t, t^2, ..., t^(r-1) in the target.
std::vector<std::uint64_t> embedding_generator_powers(const FieldSpec& source, const FieldSpec& target);

}  // namespace npcurve
