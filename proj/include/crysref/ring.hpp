#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace crysref {

using Integer = boost::multiprecision::cpp_int;

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SpecMismatch : public RingError {
 public:
  SpecMismatch() : RingError("ring spec mismatch") {}
};

class FormalAlphaOverflow : public RingError {
 public:
  FormalAlphaOverflow() : RingError("formal alpha overflow: product needs an alpha^2 term") {}
};

class NotAUnit : public RingError {
 public:
  explicit NotAUnit(const std::string& what) : RingError("not a unit: " + what) {}
};

class RingParseError : public RingError {
 public:
  explicit RingParseError(const std::string& what) : RingError("cannot parse ring element: " + what) {}
};

/// Which ring the scalar entries live in.
class RingSpec {
 public:
  enum class Mode { Cyclotomic, FormalAlpha };

  static RingSpec cyclotomic(int d);
  static RingSpec formal_alpha();

  Mode mode() const { return mode_; }
  /// d for cyclotomic rings, 0 for the formal ring.
  int order() const { return d_; }
  /// Coefficients (c0, c1, c2) of u^2 + c1 u + c0; empty in formal mode.
  std::optional<std::array<int, 3>> minimal_polynomial() const;
  /// UTF-8 symbol used for u when rendering.
  std::string unit_symbol() const;
  std::string name() const;

  bool operator==(const RingSpec& o) const { return mode_ == o.mode_ && d_ == o.d_; }
  bool operator!=(const RingSpec& o) const { return !(*this == o); }

 private:
  RingSpec(Mode m, int d) : mode_(m), d_(d) {}
  Mode mode_;
  int d_;
};

/// a + b*u with u a primitive d-th root of unity or the formal modulus alpha.
class RingElement {
 public:
  RingElement(RingSpec spec, Integer a = 0, Integer b = 0);

  static RingElement zero(RingSpec spec) { return RingElement(spec); }
  static RingElement one(RingSpec spec) { return RingElement(spec, 1); }
  static RingElement unit_root(RingSpec spec) { return RingElement(spec, 0, 1); }

  const RingSpec& spec() const { return spec_; }
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_ == 1 && b_.is_zero(); }

  /// Norm x * conj(x); an integer for cyclotomic rings.
  Integer norm() const;
  bool is_unit() const;
  /// Inverse of a unit; throws NotAUnit otherwise.
  RingElement inverse_unit() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);

  friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
  friend RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
  friend RingElement operator*(RingElement x, const RingElement& y) { return x *= y; }

  bool operator==(const RingElement& o) const { return spec_ == o.spec_ && a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const RingElement& o) const { return !(*this == o); }

  RingElement pow(unsigned k) const;

  /// `a+b*w` or `a-c*w`.
  std::string to_string() const;
  static RingElement parse(RingSpec spec, const std::string& text);

 private:
  void check(const RingElement& o) const;
  RingSpec spec_;
  Integer a_;
  Integer b_;
};

RingElement ring_add(const RingElement& x, const RingElement& y);
RingElement ring_mul(const RingElement& x, const RingElement& y);
RingElement ring_neg_inv_unit(const RingElement& x);

}  // namespace crysref
