#ifndef SLP_FIELD_HPP
#define SLP_FIELD_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "slp/error.hpp"

namespace slp {

class Field;

/// Element of F_p or of F_p[tau]/(tau^2 - tau - 1), stored as a + b*tau
/// with a, b canonical residues in [0, p).  Elements are immutable values
/// and carry their field, so mixed-field arithmetic is caught at run time.
class Fq {
public:
  uint32_t a() const noexcept { return a_; }
  uint32_t b() const noexcept { return b_; }
  uint32_t characteristic() const noexcept { return p_; }
  bool in_extension() const noexcept { return ext_; }

  bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
  bool is_one() const noexcept { return a_ == 1 && b_ == 0; }

  friend Fq operator+(Fq x, Fq y);
  friend Fq operator-(Fq x, Fq y);
  friend Fq operator*(Fq x, Fq y);
  Fq operator-() const;

  Fq& operator+=(Fq o) { return *this = *this + o; }
  Fq& operator-=(Fq o) { return *this = *this - o; }
  Fq& operator*=(Fq o) { return *this = *this * o; }

  /// Multiplicative inverse; throws DivisionByZero on 0.
  Fq inv() const;
  Fq pow(uint64_t e) const;

  bool operator==(const Fq& o) const noexcept {
    return a_ == o.a_ && b_ == o.b_ && p_ == o.p_ && ext_ == o.ext_;
  }
  bool operator!=(const Fq& o) const noexcept { return !(*this == o); }

  std::string str() const;

private:
  friend class Field;
  Fq(uint32_t a, uint32_t b, uint32_t p, bool ext) noexcept
      : a_(a), b_(b), p_(p), ext_(ext) {}

  void require_same(const Fq& o) const;

  uint32_t a_;
  uint32_t b_;
  uint32_t p_;
  bool ext_;
};

std::ostream& operator<<(std::ostream& os, const Fq& x);

/// Field context: a prime field F_p or the quadratic extension
/// F_p[tau]/(tau^2 - tau - 1).  The modulus is a run-time value so the
/// same build can re-run a computation under several primes.
class Field {
public:
  /// F_p.  Throws NotPrime for composite or p < 2.
  static Field prime(uint32_t p);

  /// F_p[tau]/(tau^2 - tau - 1).  Throws NotPrime, or ReducibleModulus
  /// when tau^2 - tau - 1 has a root mod p (that happens exactly for
  /// p = 5 and p = +-1 mod 5, in which case F_p[tau] is not a field).
  static Field quadratic(uint32_t p);

  uint32_t characteristic() const noexcept { return p_; }
  bool is_extension() const noexcept { return ext_; }
  uint64_t order() const noexcept {
    return ext_ ? uint64_t(p_) * p_ : uint64_t(p_);
  }

  Fq zero() const noexcept { return Fq(0, 0, p_, ext_); }
  Fq one() const noexcept { return Fq(1 % p_, 0, p_, ext_); }
  /// The adjoined root; only defined on extension fields.
  Fq tau() const;

  /// Canonical residue of an integer.
  Fq from_int(int64_t v) const;
  /// a + b*tau (extension fields only when b != 0 mod p).
  Fq elem(int64_t a, int64_t b) const;

  bool operator==(const Field& o) const noexcept {
    return p_ == o.p_ && ext_ == o.ext_;
  }
  bool operator!=(const Field& o) const noexcept { return !(*this == o); }

  /// Header form used by ideal files, e.g. "GF(13^2) tau^2-tau-1".
  std::string str() const;

private:
  Field(uint32_t p, bool ext) noexcept : p_(p), ext_(ext) {}

  uint32_t p_;
  bool ext_;
};

bool is_prime(uint32_t n) noexcept;

/// True iff tau^2 - tau - 1 is irreducible over F_p.
bool tau_modulus_irreducible(uint32_t p);

} // namespace slp

template <>
struct std::hash<slp::Fq> {
  size_t operator()(const slp::Fq& x) const noexcept {
    uint64_t v = (uint64_t(x.a()) << 32) | x.b();
    v ^= x.characteristic() + 0x9e3779b97f4a7c15ull + (v << 6);
    return std::hash<uint64_t>{}(v);
  }
};

#endif
