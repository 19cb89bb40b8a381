#ifndef RINGGB_POLYNOMIAL_HPP
#define RINGGB_POLYNOMIAL_HPP

#include <span>
#include <string>
#include <vector>

#include "ringgb/coeff_ring.hpp"
#include "ringgb/term.hpp"

namespace ringgb {

struct Monomial {
  Coeff coeff;
  Term term;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical sparse polynomial: monomials strictly descending in the term
/// order of the PolyRing that built it, no zero coefficients. The zero
/// polynomial has no monomials.
class Polynomial {
 public:
  Polynomial() = default;

  bool is_zero() const noexcept { return monomials_.empty(); }
  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  auto begin() const noexcept { return monomials_.begin(); }
  auto end() const noexcept { return monomials_.end(); }

  // Head monomial, head term and head coefficient; undefined on zero.
  const Monomial& head() const { return monomials_.front(); }
  const Term& head_term() const { return monomials_.front().term; }
  const Coeff& head_coeff() const { return monomials_.front().coeff; }
  Polynomial rest() const;

  // Coefficient of t, or nullptr when t does not occur.
  const Coeff* coefficient_of(const Term& t) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  friend class PolyRing;
  explicit Polynomial(std::vector<Monomial> canonical) : monomials_(std::move(canonical)) {}

  std::vector<Monomial> monomials_;
};

/// R[x_1, ..., x_n] with a fixed coefficient ring, term order and variable
/// names. Polynomials are plain values; every arithmetic operation goes
/// through the PolyRing so the result is canonical for its order.
class PolyRing {
 public:
  PolyRing(Ring coeffs, TermOrder order, std::vector<std::string> variables);

  const Ring& coeffs() const noexcept { return coeffs_; }
  const TermOrder& order() const noexcept { return order_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t nvars() const noexcept { return variables_.size(); }

  Term unit_term() const { return Term(nvars()); }
  Term variable_term(std::size_t index, Exponent power = 1) const;

  // Merge duplicate terms, drop zeros, sort descending.
  Polynomial normalize(std::vector<Monomial> monomials) const;
  Polynomial monomial(const Coeff& c, const Term& t) const;
  Polynomial constant(const Coeff& c) const { return monomial(c, unit_term()); }
  bool is_canonical(const Polynomial& p) const;

  Polynomial add(const Polynomial& p, const Polynomial& q) const;
  Polynomial sub(const Polynomial& p, const Polynomial& q) const;
  Polynomial neg(const Polynomial& p) const;
  Polynomial scale(const Coeff& c, const Polynomial& p) const;
  // c * t * p
  Polynomial mul_monomial(const Coeff& c, const Term& t, const Polynomial& p) const;
  Polynomial mul(const Polynomial& p, const Polynomial& q) const;

  // sum cofactors[i] * polys[i]; both spans must have equal length.
  Polynomial combine(std::span<const Polynomial> cofactors, std::span<const Polynomial> polys) const;

  // Multiply by the unit that normalizes the head (monic or positive).
  Polynomial normalize_head(const Polynomial& p) const;

 private:
  Polynomial merge(const Polynomial& p, const Polynomial& q, bool subtract) const;

  Ring coeffs_;
  TermOrder order_;
  std::vector<std::string> variables_;
};

}  // namespace ringgb

#endif  // RINGGB_POLYNOMIAL_HPP
