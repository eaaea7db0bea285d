#include "textio.hpp"

#include <cctype>
#include <map>

#include "npcurve/error.hpp"

namespace npcli {

using npcurve::CurveSpec;
using npcurve::ErrorCode;
using npcurve::FieldElement;
using npcurve::FieldSpec;
using npcurve::FPoly;
using npcurve::Rat;
using npcurve::RationalFn;

namespace {

constexpr std::uint64_t kMaxExponent = std::uint64_t(1) << 20;

class ExprParser {
 public:
  ExprParser(const FieldSpec& field, const std::string& text) : field_(field), text_(text) {}

  RationalFn parse() {
    RationalFn value = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseFailure("trailing input in expression at '" + text_.substr(pos_) + "'");
    return value;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RationalFn expr() {
    RationalFn value = term();
    for (;;) {
      if (eat('+'))
        value = value + term();
      else if (eat('-'))
        value = value - term();
      else
        return value;
    }
  }

  RationalFn term() {
    RationalFn value = factor();
    for (;;) {
      if (eat('*'))
        value = value * factor();
      else if (eat('/'))
        value = value / factor();
      else
        return value;
    }
  }

  RationalFn factor() {
    if (eat('-')) return constant(0) - factor();
    if (eat('+')) return factor();
    RationalFn base = atom();
    if (!eat('^')) return base;
    std::uint64_t e = uint_literal();
    if (e > kMaxExponent) throw ParseFailure("exponent exceeds 2^20");
    // Exact powers; the square-and-multiply keeps intermediate blowup down.
    RationalFn acc = constant(1);
    while (e != 0) {
      if (e & 1) acc = acc * base;
      e >>= 1;
      if (e != 0) base = base * base;
    }
    return acc;
  }

  RationalFn atom() {
    const char c = peek();
    if (c == '(') {
      eat('(');
      RationalFn value = expr();
      if (!eat(')')) throw ParseFailure("missing ')' in expression");
      return value;
    }
    if (c == 'x') {
      ++pos_;
      return RationalFn::from_poly(FPoly::monomial(field_, 1, 1));
    }
    if (c == 't') {
      ++pos_;
      if (field_.r() < 2)
        npcurve::fail(ErrorCode::BadElementExpression,
                      "t names the extension generator; " + field_.to_string() +
                          " is a prime field");
      return constant_packed(field_.p());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(uint_literal());
    throw ParseFailure(std::string("unexpected character '") + c + "' in expression");
  }

  std::uint64_t uint_literal() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseFailure("expected an integer literal");
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = std::uint64_t(text_[pos_] - '0');
      if (value > (UINT64_MAX - digit) / 10) throw ParseFailure("integer literal overflows");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  RationalFn constant(std::uint64_t n) { return constant_packed(n % field_.p()); }

  RationalFn constant_packed(std::uint64_t packed) {
    return RationalFn::from_poly(FPoly::constant(field_, packed));
  }

  const FieldSpec& field_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

// key=value fields after the family word; tokens without '=' continue the
// previous value, so expressions may contain spaces.
std::map<std::string, std::string> key_values(const std::vector<std::string>& tokens,
                                              std::size_t start) {
  std::map<std::string, std::string> kv;
  std::string current;
  for (std::size_t i = start; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    const std::size_t eq = tok.find('=');
    if (eq == std::string::npos) {
      if (current.empty()) throw ParseFailure("expected key=value, got '" + tok + "'");
      kv[current] += tok;
    } else {
      current = tok.substr(0, eq);
      if (current.empty()) throw ParseFailure("empty key in '" + tok + "'");
      if (kv.count(current)) throw ParseFailure("duplicate key '" + current + "'");
      kv[current] = tok.substr(eq + 1);
    }
  }
  return kv;
}

const std::string& need(const std::map<std::string, std::string>& kv, const std::string& key,
                        const std::string& family) {
  auto it = kv.find(key);
  if (it == kv.end()) throw ParseFailure("'" + family + "' needs " + key + "=...");
  return it->second;
}

void reject_extras(const std::map<std::string, std::string>& kv,
                   std::initializer_list<const char*> allowed, const std::string& family) {
  for (const auto& [key, value] : kv) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ParseFailure("'" + family + "' does not take " + key + "=...");
  }
}

// q = p^r with p prime; returns the field.
FieldSpec field_from_q(std::uint64_t q) {
  if (q < 2) throw ParseFailure("q must be a prime power >= 2");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::uint32_t r = 0;
  for (std::uint64_t rest = q; rest != 1; rest /= p) {
    if (rest % p != 0) throw ParseFailure("q = " + std::to_string(q) + " is not a prime power");
    ++r;
  }
  return npcurve::make_field(p, r);
}

}  // namespace

RationalFn parse_ratfn(const FieldSpec& field, const std::string& text) {
  return ExprParser(field, text).parse();
}

FieldElement parse_element(const FieldSpec& field, const std::string& text) {
  const RationalFn value = parse_ratfn(field, text);
  if (!value.is_constant())
    npcurve::fail(ErrorCode::BadElementExpression, "'" + text + "' is not a field constant");
  const std::uint64_t num = value.num.is_zero() ? 0 : value.num.c[0];
  const std::uint64_t den = value.den.c[0];
  return FieldElement(field, field.mul(num, field.inv(den)));
}

CurveSpec parse_curve(const std::string& text) {
  std::vector<std::string> tokens;
  std::string tok;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!tok.empty()) tokens.push_back(std::move(tok)), tok.clear();
    } else {
      tok += c;
    }
  }
  if (!tok.empty()) tokens.push_back(std::move(tok));
  if (tokens.empty()) throw ParseFailure("empty curve specification");

  const std::string family = tokens[0];
  const auto kv = key_values(tokens, 1);

  if (family == "as") {
    reject_extras(kv, {"p", "q", "f"}, family);
    const std::uint64_t p = parse_u64(need(kv, "p", family), "p");
    const std::uint64_t q = parse_u64(need(kv, "q", family), "q");
    const FieldSpec field = field_from_q(q);
    if (field.p() != p)
      throw ParseFailure("q = " + std::to_string(q) + " is not a power of p = " +
                         std::to_string(p));
    return npcurve::make_as(field, parse_ratfn(field, need(kv, "f", family)));
  }
  if (family == "lin") {
    reject_extras(kv, {"h", "q"}, family);
    const std::uint64_t h = parse_u64(need(kv, "h", family), "h");
    if (h == 0 || h > 32) throw ParseFailure("h must be in 1..32");
    return npcurve::make_linearized(static_cast<std::uint32_t>(h),
                                    field_from_q(parse_u64(need(kv, "q", family), "q")));
  }
  if (family == "hermitian") {
    reject_extras(kv, {"q"}, family);
    return npcurve::make_hermitian(parse_u64(need(kv, "q", family), "q"));
  }
  if (family == "hyp") {
    reject_extras(kv, {"q", "f"}, family);
    const FieldSpec field = field_from_q(parse_u64(need(kv, "q", family), "q"));
    const RationalFn f = parse_ratfn(field, need(kv, "f", family));
    if (!f.is_polynomial())
      npcurve::fail(ErrorCode::NotPolynomial, "hyperelliptic f must be a polynomial");
    const std::uint64_t lead_inv = field.inv(f.den.c[0]);
    FPoly poly = f.num;
    for (auto& c : poly.c) c = field.mul(c, lead_inv);
    return npcurve::make_hyperelliptic(field, poly);
  }
  if (family == "legendre") {
    reject_extras(kv, {"p", "lambda"}, family);
    const std::uint64_t p = parse_u64(need(kv, "p", family), "p");
    const FieldSpec field = npcurve::make_field(p, 2);
    return npcurve::make_legendre(parse_element(field, need(kv, "lambda", family)));
  }
  throw ParseFailure("unknown curve family '" + family + "'");
}

std::vector<Rat> parse_slopes(const std::string& text) {
  // Items separated by commas and/or whitespace: "0^2, (1/2)^4" and
  // "0^2 (1/2)^4" both work.
  std::vector<std::string> items;
  std::string current;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) items.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) items.push_back(std::move(current));
  if (items.empty()) throw ParseFailure("empty slope list");

  std::vector<Rat> slopes;
  for (const std::string& item : items) {
    std::size_t pos = 0;
    auto integer = [&]() -> std::int64_t {
      std::size_t begin = pos;
      while (pos < item.size() && std::isdigit(static_cast<unsigned char>(item[pos]))) ++pos;
      if (pos == begin)
        throw ParseFailure("expected an integer in slope item '" + item + "'");
      return std::stoll(item.substr(begin, pos - begin));
    };
    const bool parens = item[pos] == '(';
    if (parens) ++pos;
    const std::int64_t num = integer();
    std::int64_t den = 1;
    if (pos < item.size() && item[pos] == '/') {
      ++pos;
      den = integer();
    }
    if (parens) {
      if (pos >= item.size() || item[pos] != ')')
        throw ParseFailure("missing ')' in slope item '" + item + "'");
      ++pos;
    }
    std::int64_t mult = 1;
    if (pos < item.size() && item[pos] == '^') {
      ++pos;
      mult = integer();
    }
    if (pos != item.size()) throw ParseFailure("trailing text in slope item '" + item + "'");
    if (den == 0) throw ParseFailure("slope denominator 0");
    if (mult < 1 || mult > 4096) throw ParseFailure("slope multiplicity out of range");
    for (std::int64_t i = 0; i < mult; ++i) slopes.emplace_back(num, den);
  }
  return slopes;
}

std::vector<std::int64_t> parse_nu(const std::string& text) {
  std::string clean;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) clean += c;
  if (!clean.empty() && clean.front() == '[') {
    if (clean.back() != ']') throw ParseFailure("missing ']' in type");
    clean = clean.substr(1, clean.size() - 2);
  }
  if (clean.empty()) throw ParseFailure("empty type");
  std::vector<std::int64_t> nu;
  std::size_t pos = 0;
  while (pos <= clean.size()) {
    const std::size_t comma = clean.find(',', pos);
    const std::string part = clean.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw ParseFailure("bad entry '" + part + "' in type");
    nu.push_back(std::stoll(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return nu;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseFailure(what + " must be a non-negative integer, got '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw ParseFailure(what + " overflows: '" + text + "'");
  }
}

}  // namespace npcli
