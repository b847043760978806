#include "crysref/ring.hpp"

#include <cctype>

namespace crysref {

RingSpec RingSpec::cyclotomic(int d) {
  if (d != 3 && d != 4 && d != 6) throw RingError("cyclotomic order must be 3, 4 or 6, got " + std::to_string(d));
  return RingSpec(Mode::Cyclotomic, d);
}

RingSpec RingSpec::formal_alpha() { return RingSpec(Mode::FormalAlpha, 0); }

std::optional<std::array<int, 3>> RingSpec::minimal_polynomial() const {
  switch (d_) {
    case 3: return std::array<int, 3>{1, 1, 1};
    case 4: return std::array<int, 3>{1, 0, 1};
    case 6: return std::array<int, 3>{1, -1, 1};
    default: return std::nullopt;
  }
}

std::string RingSpec::unit_symbol() const {
  switch (d_) {
    case 3: return "ζ3";
    case 4: return "i";
    case 6: return "ζ6";
    default: return "α";
  }
}

std::string RingSpec::name() const {
  if (mode_ == Mode::FormalAlpha) return "Z+αZ";
  return "Z[" + unit_symbol() + "]";
}

RingElement::RingElement(RingSpec spec, Integer a, Integer b) : spec_(spec), a_(std::move(a)), b_(std::move(b)) {}

void RingElement::check(const RingElement& o) const {
  if (spec_ != o.spec_) throw SpecMismatch();
}

RingElement RingElement::operator-() const { return RingElement(spec_, -a_, -b_); }

RingElement& RingElement::operator+=(const RingElement& o) {
  check(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  check(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
  check(o);
  if (b_.is_zero()) {
    b_ = a_ * o.b_;
    a_ *= o.a_;
    return *this;
  }
  if (o.b_.is_zero()) {
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  auto mp = spec_.minimal_polynomial();
  if (!mp) throw FormalAlphaOverflow();
  // u^2 = -c1 u - c0
  const int c0 = (*mp)[0], c1 = (*mp)[1];
  Integer bb = b_ * o.b_;
  Integer na = a_ * o.a_ - c0 * bb;
  Integer nb = a_ * o.b_ + b_ * o.a_ - c1 * bb;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

Integer RingElement::norm() const {
  auto mp = spec_.minimal_polynomial();
  if (!mp) {
    if (!b_.is_zero()) throw NotAUnit(to_string());
    return a_ * a_;
  }
  return a_ * a_ - (*mp)[1] * a_ * b_ + (*mp)[0] * b_ * b_;
}

bool RingElement::is_unit() const {
  if (spec_.mode() == RingSpec::Mode::FormalAlpha) return b_.is_zero() && (a_ == 1 || a_ == -1);
  return norm() == 1;
}

RingElement RingElement::inverse_unit() const {
  if (!is_unit()) throw NotAUnit(to_string());
  if (spec_.mode() == RingSpec::Mode::FormalAlpha) return *this;
  // conjugate root is -c1 - u
  const int c1 = (*spec_.minimal_polynomial())[1];
  return RingElement(spec_, a_ - c1 * b_, -b_);
}

RingElement RingElement::pow(unsigned k) const {
  RingElement r = one(spec_);
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

std::string RingElement::to_string() const {
  std::string s = a_.str();
  if (b_ < 0) {
    s += "-" + Integer(-b_).str();
  } else {
    s += "+" + b_.str();
  }
  return s + "*" + spec_.unit_symbol();
}

namespace {

bool parse_int(const std::string& t, std::size_t& pos, Integer& out) {
  std::size_t start = pos;
  bool neg = false;
  if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
    neg = t[pos] == '-';
    ++pos;
  }
  std::size_t digits = pos;
  while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
  if (pos == digits) {
    pos = start;
    return false;
  }
  out = Integer(t.substr(digits, pos - digits));
  if (neg) out = -out;
  return true;
}

}  // namespace

RingElement RingElement::parse(RingSpec spec, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  std::size_t pos = 0;
  Integer a, b;
  if (!parse_int(t, pos, a)) throw RingParseError(text);
  if (pos == t.size()) return RingElement(spec, a, 0);
  if (t[pos] != '+' && t[pos] != '-') throw RingParseError(text);
  if (!parse_int(t, pos, b)) throw RingParseError(text);
  if (pos >= t.size() || t[pos] != '*') throw RingParseError(text);
  ++pos;
  std::string sym = t.substr(pos);
  std::string expected = spec.unit_symbol();
  bool ok = sym == expected;
  if (!ok) {
    if (spec.mode() == RingSpec::Mode::FormalAlpha) ok = sym == "alpha" || sym == "a";
    else if (spec.order() == 3) ok = sym == "zeta3" || sym == "z3";
    else if (spec.order() == 6) ok = sym == "zeta6" || sym == "z6";
  }
  if (!ok) throw RingParseError(text);
  return RingElement(spec, a, b);
}

RingElement ring_add(const RingElement& x, const RingElement& y) { return x + y; }
RingElement ring_mul(const RingElement& x, const RingElement& y) { return x * y; }
RingElement ring_neg_inv_unit(const RingElement& x) { return x.inverse_unit(); }

}  // namespace crysref
