#include "slp/field.hpp"

#include <ostream>

namespace slp {

const char* error_code_name(Error::Code code) noexcept {
  switch (code) {
    case Error::Code::NotPrime: return "NotPrime";
    case Error::Code::ReducibleModulus: return "ReducibleModulus";
    case Error::Code::DivisionByZero: return "DivisionByZero";
    case Error::Code::FieldMismatch: return "FieldMismatch";
    case Error::Code::ArityMismatch: return "ArityMismatch";
    case Error::Code::ContextMismatch: return "ContextMismatch";
    case Error::Code::ExponentOverflow: return "ExponentOverflow";
    case Error::Code::NotLinear: return "NotLinear";
    case Error::Code::SingularSubstitution: return "SingularSubstitution";
    case Error::Code::NonHomogeneousInput: return "NonHomogeneousInput";
    case Error::Code::NotArtinian: return "NotArtinian";
    case Error::Code::WrongTermOrder: return "WrongTermOrder";
    case Error::Code::ZeroCandidate: return "ZeroCandidate";
    case Error::Code::ParseError: return "ParseError";
    case Error::Code::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

inline uint32_t add_mod(uint32_t x, uint32_t y, uint32_t p) noexcept {
  uint32_t s = x + y;
  return s >= p ? s - p : s;
}

inline uint32_t sub_mod(uint32_t x, uint32_t y, uint32_t p) noexcept {
  return x >= y ? x - y : x + p - y;
}

inline uint32_t mul_mod(uint32_t x, uint32_t y, uint32_t p) noexcept {
  return uint32_t((uint64_t(x) * y) % p);
}

// Extended Euclid; pre: 0 < a < p, gcd(a, p) = 1.
uint32_t inv_mod(uint32_t a, uint32_t p) {
  int64_t t = 0, newt = 1;
  int64_t r = p, newr = a;
  while (newr != 0) {
    int64_t q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (t < 0) t += p;
  return uint32_t(t);
}

} // namespace

bool is_prime(uint32_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint32_t d = 3; uint64_t(d) * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool tau_modulus_irreducible(uint32_t p) {
  if (!is_prime(p)) throw Error(Error::Code::NotPrime, "p must be prime");
  if (p == 2) return true; // tau^2 + tau + 1, no root over F_2
  if (p == 5) return false; // double root tau = 3
  // Discriminant of tau^2 - tau - 1 is 5: irreducible iff 5 is a
  // quadratic non-residue mod p (Euler's criterion).
  uint32_t r = 1, base = 5 % p;
  uint32_t e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return r == p - 1;
}

void Fq::require_same(const Fq& o) const {
  if (p_ != o.p_ || ext_ != o.ext_)
    throw Error(Error::Code::FieldMismatch,
                "field elements belong to different field contexts");
}

Fq operator+(Fq x, Fq y) {
  x.require_same(y);
  return Fq(add_mod(x.a_, y.a_, x.p_), add_mod(x.b_, y.b_, x.p_), x.p_, x.ext_);
}

Fq operator-(Fq x, Fq y) {
  x.require_same(y);
  return Fq(sub_mod(x.a_, y.a_, x.p_), sub_mod(x.b_, y.b_, x.p_), x.p_, x.ext_);
}

Fq Fq::operator-() const {
  return Fq(a_ ? p_ - a_ : 0, b_ ? p_ - b_ : 0, p_, ext_);
}

Fq operator*(Fq x, Fq y) {
  x.require_same(y);
  uint32_t p = x.p_;
  // (a + b*tau)(c + d*tau) with tau^2 = tau + 1.
  uint64_t ac = uint64_t(x.a_) * y.a_;
  uint64_t bd = uint64_t(x.b_) * y.b_;
  uint64_t ad_bc = uint64_t(x.a_) * y.b_ + uint64_t(x.b_) * y.a_;
  return Fq(uint32_t((ac + bd) % p), uint32_t((ad_bc + bd) % p), p, x.ext_);
}

Fq Fq::inv() const {
  if (is_zero())
    throw Error(Error::Code::DivisionByZero, "inverse of zero");
  if (b_ == 0) return Fq(inv_mod(a_, p_), 0, p_, ext_);
  // Conjugate of a + b*tau is (a + b) - b*tau; the norm a^2 + ab - b^2
  // lies in F_p and is nonzero since the modulus is irreducible.
  uint64_t n = (uint64_t(a_) * a_ + uint64_t(a_) * b_ +
                uint64_t(p_) * p_ - uint64_t(b_) * b_) % p_;
  uint32_t ninv = inv_mod(uint32_t(n), p_);
  return Fq(mul_mod(add_mod(a_, b_, p_), ninv, p_),
            mul_mod(p_ - b_, ninv, p_), p_, ext_);
}

Fq Fq::pow(uint64_t e) const {
  Fq base = *this;
  Fq r = Fq(1 % p_, 0, p_, ext_);
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::string Fq::str() const {
  if (b_ == 0) return std::to_string(a_);
  std::string t = b_ == 1 ? "tau" : std::to_string(b_) + "*tau";
  if (a_ == 0) return t;
  return std::to_string(a_) + "+" + t;
}

std::ostream& operator<<(std::ostream& os, const Fq& x) {
  return os << x.str();
}

Field Field::prime(uint32_t p) {
  if (!is_prime(p))
    throw Error(Error::Code::NotPrime,
                "characteristic " + std::to_string(p) + " is not prime");
  return Field(p, false);
}

Field Field::quadratic(uint32_t p) {
  if (!is_prime(p))
    throw Error(Error::Code::NotPrime,
                "characteristic " + std::to_string(p) + " is not prime");
  if (!tau_modulus_irreducible(p))
    throw Error(Error::Code::ReducibleModulus,
                "tau^2-tau-1 has a root mod " + std::to_string(p) +
                    " (it splits exactly for p = 5 and p = +-1 mod 5), so "
                    "F_p[tau] would not be a field of order p^2");
  return Field(p, true);
}

Fq Field::tau() const {
  if (!ext_)
    throw Error(Error::Code::FieldMismatch,
                "tau is only defined in the quadratic extension");
  return Fq(0, 1, p_, ext_);
}

Fq Field::from_int(int64_t v) const {
  int64_t r = v % int64_t(p_);
  if (r < 0) r += p_;
  return Fq(uint32_t(r), 0, p_, ext_);
}

Fq Field::elem(int64_t a, int64_t b) const {
  int64_t ra = a % int64_t(p_);
  if (ra < 0) ra += p_;
  int64_t rb = b % int64_t(p_);
  if (rb < 0) rb += p_;
  if (rb != 0 && !ext_)
    throw Error(Error::Code::FieldMismatch,
                "tau component in a prime-field context");
  return Fq(uint32_t(ra), uint32_t(rb), p_, ext_);
}

std::string Field::str() const {
  if (!ext_) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^2) tau^2-tau-1";
}

} // namespace slp
