#ifndef SLP_MONOMIAL_HPP
#define SLP_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

#include "slp/error.hpp"

namespace slp {

enum class TermOrder { grevlex, lex };

const char* term_order_name(TermOrder o) noexcept;

/// Power product in up to kMaxVars variables, stored as a dense exponent
/// vector with one byte per exponent and a cached total degree.  Exponents
/// are capped at 255; products guard against overflow.
class Monomial {
public:
  static constexpr int kMaxVars = 8;

  static Monomial one(int nvars);
  static Monomial variable(int nvars, int index, int exponent = 1);
  static Monomial from_exponents(std::span<const int> exps);
  static Monomial from_exponents(std::initializer_list<int> exps);

  int arity() const noexcept { return n_; }
  int degree() const noexcept { return deg_; }
  int exponent(int i) const noexcept { return e_[size_t(i)]; }
  bool is_one() const noexcept { return deg_ == 0; }

  /// True iff the monomial is a power of a single variable (or 1).
  bool is_pure_power() const noexcept;

  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; pre: o.divides(*this).
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;

  friend Monomial lcm(const Monomial& x, const Monomial& y);
  friend Monomial gcd(const Monomial& x, const Monomial& y);
  friend bool coprime(const Monomial& x, const Monomial& y);

  bool operator==(const Monomial& o) const noexcept {
    return n_ == o.n_ && deg_ == o.deg_ && e_ == o.e_;
  }
  bool operator!=(const Monomial& o) const noexcept { return !(*this == o); }

  size_t hash() const noexcept;

private:
  Monomial() = default;
  void require_same_arity(const Monomial& o) const;

  std::array<uint8_t, kMaxVars> e_{};
  uint16_t deg_ = 0;
  uint8_t n_ = 0;
};

/// Total order on monomials of equal arity.  grevlex: higher degree wins;
/// on equal degree the rightmost differing variable decides, and the
/// monomial with the smaller exponent there is the larger one.  lex:
/// leftmost differing variable, larger exponent wins, degree ignored.
std::strong_ordering compare(const Monomial& x, const Monomial& y,
                             TermOrder order);

} // namespace slp

template <>
struct std::hash<slp::Monomial> {
  size_t operator()(const slp::Monomial& m) const noexcept { return m.hash(); }
};

#endif
