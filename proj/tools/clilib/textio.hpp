#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "npcurve/curves.hpp"
#include "npcurve/numeric.hpp"

namespace npcli {

// Command-line grammar violations; the driver maps these to exit code 2.
// Math-domain rejections keep their npcurve::Error codes and exit 1.
struct ParseFailure : std::runtime_error {
  explicit ParseFailure(const std::string& what) : std::runtime_error(what) {}
};

// Expression over the field: x, t (extension generator), integer literals,
// + - * / ^ and parentheses. Whitespace is insignificant.
npcurve::RationalFn parse_ratfn(const npcurve::FieldSpec& field, const std::string& text);

// Same grammar restricted to a constant value.
npcurve::FieldElement parse_element(const npcurve::FieldSpec& field, const std::string& text);

// Curve grammar:
//   as p=<p> q=<p^r> f=<rational expr in x>
//   lin h=<h> q=<p^r>
//   hermitian q=<prime power>
//   hyp q=<odd prime power> f=<poly in x>
//   legendre p=<odd prime> lambda=<element expr over F_{p^2}>
npcurve::CurveSpec parse_curve(const std::string& text);

// Slope multiset: comma-separated items "n/d^m", "(n/d)^m", "0^m", "1";
// omitted ^m means multiplicity 1.
std::vector<npcurve::Rat> parse_slopes(const std::string& text);

// Final-type input: "0,1,1" or "[0,1,1]".
std::vector<std::int64_t> parse_nu(const std::string& text);

std::uint64_t parse_u64(const std::string& text, const std::string& what);

}  // namespace npcli
