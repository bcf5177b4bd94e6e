#include "slp/monomial.hpp"

#include <string>

namespace slp {

const char* term_order_name(TermOrder o) noexcept {
  return o == TermOrder::grevlex ? "grevlex" : "lex";
}

Monomial Monomial::one(int nvars) {
  if (nvars < 1 || nvars > kMaxVars)
    throw Error(Error::Code::ArityMismatch,
                "arity must be between 1 and " + std::to_string(kMaxVars));
  Monomial m;
  m.n_ = uint8_t(nvars);
  return m;
}

Monomial Monomial::variable(int nvars, int index, int exponent) {
  Monomial m = one(nvars);
  if (index < 0 || index >= nvars)
    throw Error(Error::Code::ArityMismatch, "variable index out of range");
  if (exponent < 0 || exponent > 255)
    throw Error(Error::Code::ExponentOverflow, "exponent out of [0,255]");
  m.e_[size_t(index)] = uint8_t(exponent);
  m.deg_ = uint16_t(exponent);
  return m;
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
  Monomial m = one(int(exps.size()));
  int deg = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255)
      throw Error(Error::Code::ExponentOverflow, "exponent out of [0,255]");
    m.e_[i] = uint8_t(exps[i]);
    deg += exps[i];
  }
  if (deg > 0xffff)
    throw Error(Error::Code::ExponentOverflow, "total degree overflow");
  m.deg_ = uint16_t(deg);
  return m;
}

Monomial Monomial::from_exponents(std::initializer_list<int> exps) {
  return from_exponents(std::span<const int>(exps.begin(), exps.size()));
}

bool Monomial::is_pure_power() const noexcept {
  int support = 0;
  for (int i = 0; i < n_; ++i) support += e_[size_t(i)] != 0;
  return support <= 1;
}

void Monomial::require_same_arity(const Monomial& o) const {
  if (n_ != o.n_)
    throw Error(Error::Code::ArityMismatch, "monomial arities differ");
}

Monomial Monomial::operator*(const Monomial& o) const {
  require_same_arity(o);
  Monomial r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) {
    int s = e_[size_t(i)] + o.e_[size_t(i)];
    if (s > 255)
      throw Error(Error::Code::ExponentOverflow,
                  "product exponent exceeds 255");
    r.e_[size_t(i)] = uint8_t(s);
  }
  r.deg_ = uint16_t(deg_ + o.deg_);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  require_same_arity(o);
  Monomial r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) {
    if (o.e_[size_t(i)] > e_[size_t(i)])
      throw Error(Error::Code::InvalidArgument, "monomial quotient not exact");
    r.e_[size_t(i)] = uint8_t(e_[size_t(i)] - o.e_[size_t(i)]);
  }
  r.deg_ = uint16_t(deg_ - o.deg_);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  require_same_arity(o);
  if (deg_ > o.deg_) return false;
  for (int i = 0; i < n_; ++i)
    if (e_[size_t(i)] > o.e_[size_t(i)]) return false;
  return true;
}

Monomial lcm(const Monomial& x, const Monomial& y) {
  x.require_same_arity(y);
  Monomial r;
  r.n_ = x.n_;
  int deg = 0;
  for (int i = 0; i < x.n_; ++i) {
    uint8_t e = std::max(x.e_[size_t(i)], y.e_[size_t(i)]);
    r.e_[size_t(i)] = e;
    deg += e;
  }
  r.deg_ = uint16_t(deg);
  return r;
}

Monomial gcd(const Monomial& x, const Monomial& y) {
  x.require_same_arity(y);
  Monomial r;
  r.n_ = x.n_;
  int deg = 0;
  for (int i = 0; i < x.n_; ++i) {
    uint8_t e = std::min(x.e_[size_t(i)], y.e_[size_t(i)]);
    r.e_[size_t(i)] = e;
    deg += e;
  }
  r.deg_ = uint16_t(deg);
  return r;
}

bool coprime(const Monomial& x, const Monomial& y) {
  x.require_same_arity(y);
  for (int i = 0; i < x.n_; ++i)
    if (x.e_[size_t(i)] && y.e_[size_t(i)]) return false;
  return true;
}

size_t Monomial::hash() const noexcept {
  // FNV-1a over the live exponent bytes.
  uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < n_; ++i) {
    h ^= e_[size_t(i)];
    h *= 1099511628211ull;
  }
  return size_t(h ^ (uint64_t(deg_) << 32));
}

std::strong_ordering compare(const Monomial& x, const Monomial& y,
                             TermOrder order) {
  if (x.arity() != y.arity())
    throw Error(Error::Code::ArityMismatch, "monomial arities differ");
  switch (order) {
    case TermOrder::grevlex: {
      if (x.degree() != y.degree())
        return x.degree() <=> y.degree();
      for (int i = x.arity() - 1; i >= 0; --i)
        if (x.exponent(i) != y.exponent(i))
          return y.exponent(i) <=> x.exponent(i);
      return std::strong_ordering::equal;
    }
    case TermOrder::lex: {
      for (int i = 0; i < x.arity(); ++i)
        if (x.exponent(i) != y.exponent(i))
          return x.exponent(i) <=> y.exponent(i);
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

} // namespace slp
