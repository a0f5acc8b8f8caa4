#pragma once

// Exact field arithmetic over Q, Q(i) and F_p, with the conjugation involution.
// All values are fully normalized so that equal elements have identical
// representations.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "aspec/errors.hpp"

namespace aspec {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class FieldKind { Rational, GaussianRational, Prime };

namespace detail {

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

inline std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

inline std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  // extended Euclid; a in [1, p)
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw DivisionByZero("element has no inverse mod p");
  return ((s0 % p) + p) % p;
}

}  // namespace detail

struct FieldTag {
  FieldKind kind = FieldKind::Rational;
  std::int64_t p = 0;  // modulus, Prime only

  static FieldTag rational() { return {FieldKind::Rational, 0}; }
  static FieldTag gaussian_rational() { return {FieldKind::GaussianRational, 0}; }
  static FieldTag prime(std::int64_t p) {
    if (!detail::is_prime(p)) throw MathError("modulus " + std::to_string(p) + " is not prime");
    return {FieldKind::Prime, p};
  }

  bool char_zero() const { return kind != FieldKind::Prime; }
  std::string name() const {
    switch (kind) {
      case FieldKind::Rational: return "Q";
      case FieldKind::GaussianRational: return "Q(i)";
      case FieldKind::Prime: return "F" + std::to_string(p);
    }
    return "?";
  }
  friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

class Scalar {
 public:
  Scalar() : field_(FieldTag::rational()) {}

  static Scalar zero(const FieldTag& f) { return Scalar(f); }
  static Scalar one(const FieldTag& f) { return of_int(1, f); }

  static Scalar of_int(long long n, const FieldTag& f) {
    Scalar s(f);
    if (f.kind == FieldKind::Prime) {
      s.res_ = ((n % f.p) + f.p) % f.p;
    } else {
      s.re_ = n;
    }
    return s;
  }

  static Scalar of_rat(const Rat& r, const FieldTag& f) {
    if (f.kind == FieldKind::Prime) {
      Scalar s(f);
      Int num = boost::multiprecision::numerator(r);
      Int den = boost::multiprecision::denominator(r);
      std::int64_t p = f.p;
      std::int64_t n = static_cast<std::int64_t>(((num % p) + p) % p);
      std::int64_t d = static_cast<std::int64_t>(den % p);
      if (d == 0) throw DivisionByZero("denominator vanishes mod p");
      s.res_ = detail::mod_mul(n, detail::mod_inv(d, p), p);
      return s;
    }
    Scalar s(f);
    s.re_ = r;
    return s;
  }

  static Scalar gaussian(const Rat& re, const Rat& im) {
    Scalar s(FieldTag::gaussian_rational());
    s.re_ = re;
    s.im_ = im;
    return s;
  }

  static Scalar imaginary_unit() { return gaussian(0, 1); }

  const FieldTag& field() const { return field_; }
  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }
  std::int64_t residue() const { return res_; }

  bool is_zero() const {
    if (field_.kind == FieldKind::Prime) return res_ == 0;
    return re_ == 0 && im_ == 0;
  }
  bool is_one() const {
    if (field_.kind == FieldKind::Prime) return res_ == 1;
    return re_ == 1 && im_ == 0;
  }
  // True when the value lies in the prime subfield's copy of the rationals
  // (no imaginary part).
  bool is_rational() const { return field_.kind != FieldKind::GaussianRational || im_ == 0; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    Scalar r(a.field_);
    if (a.field_.kind == FieldKind::Prime) {
      r.res_ = (a.res_ + b.res_) % a.field_.p;
    } else {
      r.re_ = a.re_ + b.re_;
      r.im_ = a.im_ + b.im_;
    }
    return r;
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    Scalar r(a.field_);
    if (a.field_.kind == FieldKind::Prime) {
      r.res_ = ((a.res_ - b.res_) % a.field_.p + a.field_.p) % a.field_.p;
    } else {
      r.re_ = a.re_ - b.re_;
      r.im_ = a.im_ - b.im_;
    }
    return r;
  }

  Scalar operator-() const {
    Scalar r(field_);
    if (field_.kind == FieldKind::Prime) {
      r.res_ = (field_.p - res_) % field_.p;
    } else {
      r.re_ = -re_;
      r.im_ = -im_;
    }
    return r;
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    Scalar r(a.field_);
    if (a.field_.kind == FieldKind::Prime) {
      r.res_ = detail::mod_mul(a.res_, b.res_, a.field_.p);
    } else {
      r.re_ = a.re_ * b.re_ - a.im_ * b.im_;
      r.im_ = a.re_ * b.im_ + a.im_ * b.re_;
    }
    return r;
  }

  Scalar inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Scalar r(field_);
    if (field_.kind == FieldKind::Prime) {
      r.res_ = detail::mod_inv(res_, field_.p);
    } else {
      Rat n = re_ * re_ + im_ * im_;  // conjugate over norm
      r.re_ = re_ / n;
      r.im_ = -im_ / n;
    }
    return r;
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

  Scalar conj() const {
    Scalar r = *this;
    if (field_.kind == FieldKind::GaussianRational) r.im_ = -r.im_;
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.re_ == b.re_ && a.im_ == b.im_ && a.res_ == b.res_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Total order used only for deterministic container layout.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.res_ != b.res_) return a.res_ < b.res_;
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  std::string str() const;
  static Scalar parse(std::string_view text, const FieldTag& f);

 private:
  explicit Scalar(const FieldTag& f) : field_(f) {}

  static void check_same(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_))
      throw FieldMismatch("scalars over " + a.field_.name() + " and " + b.field_.name());
  }

  FieldTag field_;
  Rat re_;
  Rat im_;
  std::int64_t res_ = 0;
};

namespace detail {

inline std::string rat_str(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

}  // namespace detail

inline std::string Scalar::str() const {
  if (field_.kind == FieldKind::Prime) return std::to_string(res_);
  if (im_ == 0) return detail::rat_str(re_);
  std::string imag = detail::rat_str(boost::multiprecision::abs(im_)) + "*i";
  if (re_ == 0) return (im_ < 0 ? "-" : "") + imag;
  return detail::rat_str(re_) + (im_ < 0 ? "-" : "+") + imag;
}

namespace detail {

// Scalar literal scanner: [sign] part [(+|-) part] where a part is
// `a`, `a/b`, `a/b*i` or `i`. At most one part may be imaginary.
class LiteralScanner {
 public:
  explicit LiteralScanner(std::string_view text) : text_(text) {}

  Scalar run(const FieldTag& f) {
    skip_space();
    Rat re = 0, im = 0;
    bool seen_im = false;
    bool neg = eat_sign();
    parse_part(neg, re, im, seen_im);
    skip_space();
    while (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      bool minus = text_[pos_] == '-';
      ++pos_;
      skip_space();
      parse_part(minus, re, im, seen_im);
      skip_space();
    }
    if (pos_ != text_.size()) fail("trailing characters in scalar literal");
    if (f.kind == FieldKind::GaussianRational) return Scalar::gaussian(re, im);
    if (im != 0) throw FieldMismatch("imaginary literal over " + f.name());
    return Scalar::of_rat(re, f);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  bool eat_sign() {
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      bool neg = text_[pos_] == '-';
      ++pos_;
      skip_space();
      return neg;
    }
    return false;
  }

  Int parse_uint() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected digit");
    Int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  void parse_part(bool neg, Rat& re, Rat& im, bool& seen_im) {
    Rat value;
    bool imaginary = false;
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      value = 1;
      imaginary = true;
    } else {
      Int num = parse_uint();
      Int den = 1;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        den = parse_uint();
        if (den == 0) throw DivisionByZero("zero denominator in literal");
      }
      value = Rat(num, den);
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != 'i') fail("expected i after *");
        ++pos_;
        imaginary = true;
      }
    }
    if (neg) value = -value;
    if (imaginary) {
      if (seen_im) fail("two imaginary parts in scalar literal");
      seen_im = true;
      im += value;
    } else {
      re += value;
    }
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw SyntaxError(msg, static_cast<int>(pos_) + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text, const FieldTag& f) {
  return detail::LiteralScanner(text).run(f);
}

}  // namespace aspec
