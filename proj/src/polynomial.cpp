#include "ringgb/polynomial.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <stdexcept>

namespace ringgb {

Polynomial Polynomial::rest() const {
  if (monomials_.empty()) return {};
  return Polynomial(std::vector<Monomial>(monomials_.begin() + 1, monomials_.end()));
}

const Coeff* Polynomial::coefficient_of(const Term& t) const {
  for (const Monomial& m : monomials_)
    if (m.term == t) return &m.coeff;
  return nullptr;
}

PolyRing::PolyRing(Ring coeffs, TermOrder order, std::vector<std::string> variables)
    : coeffs_(std::move(coeffs)), order_(std::move(order)), variables_(std::move(variables)) {
  if (variables_.size() != order_.size())
    throw std::invalid_argument("term order and variable list disagree on the variable count");
  static const std::regex name_pattern("[a-zA-Z][a-zA-Z0-9_]*");
  std::set<std::string> seen;
  for (const std::string& v : variables_) {
    if (!std::regex_match(v, name_pattern)) throw std::invalid_argument("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
  }
}

Term PolyRing::variable_term(std::size_t index, Exponent power) const {
  Term t(nvars());
  t.set(index, power);
  return t;
}

Polynomial PolyRing::normalize(std::vector<Monomial> monomials) const {
  for (Monomial& m : monomials) {
    if (m.term.size() != nvars()) throw std::invalid_argument("monomial has the wrong number of variables");
    m.coeff = coeffs_.from_rational(m.coeff);
  }
  std::stable_sort(monomials.begin(), monomials.end(),
                   [&](const Monomial& a, const Monomial& b) { return order_.greater(a.term, b.term); });
  std::vector<Monomial> out;
  out.reserve(monomials.size());
  for (Monomial& m : monomials) {
    if (!out.empty() && out.back().term == m.term) {
      out.back().coeff = coeffs_.add(out.back().coeff, m.coeff);
    } else {
      out.push_back(std::move(m));
    }
  }
  std::erase_if(out, [](const Monomial& m) { return Ring::is_zero(m.coeff); });
  return Polynomial(std::move(out));
}

Polynomial PolyRing::monomial(const Coeff& c, const Term& t) const {
  if (t.size() != nvars()) throw std::invalid_argument("term has the wrong number of variables");
  Coeff k = coeffs_.from_rational(c);
  if (Ring::is_zero(k)) return {};
  return Polynomial({Monomial{std::move(k), t}});
}

bool PolyRing::is_canonical(const Polynomial& p) const {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Monomial& m = p.monomials()[i];
    if (m.term.size() != nvars() || Ring::is_zero(m.coeff) || !coeffs_.is_canonical(m.coeff)) return false;
    if (i > 0 && !order_.greater(p.monomials()[i - 1].term, m.term)) return false;
  }
  return true;
}

Polynomial PolyRing::merge(const Polynomial& p, const Polynomial& q, bool subtract) const {
  std::vector<Monomial> out;
  out.reserve(p.size() + q.size());
  auto a = p.begin(), b = q.begin();
  while (a != p.end() || b != q.end()) {
    std::strong_ordering c = a == p.end()   ? std::strong_ordering::less
                             : b == q.end() ? std::strong_ordering::greater
                                            : order_.compare(a->term, b->term);
    if (c > 0) {
      out.push_back(*a++);
    } else if (c < 0) {
      out.push_back({subtract ? coeffs_.neg(b->coeff) : b->coeff, b->term});
      ++b;
    } else {
      Coeff s = subtract ? coeffs_.sub(a->coeff, b->coeff) : coeffs_.add(a->coeff, b->coeff);
      if (!Ring::is_zero(s)) out.push_back({std::move(s), a->term});
      ++a;
      ++b;
    }
  }
  return Polynomial(std::move(out));
}

Polynomial PolyRing::add(const Polynomial& p, const Polynomial& q) const { return merge(p, q, false); }

Polynomial PolyRing::sub(const Polynomial& p, const Polynomial& q) const { return merge(p, q, true); }

Polynomial PolyRing::neg(const Polynomial& p) const { return merge(Polynomial{}, p, true); }

Polynomial PolyRing::scale(const Coeff& c, const Polynomial& p) const { return mul_monomial(c, unit_term(), p); }

Polynomial PolyRing::mul_monomial(const Coeff& c, const Term& t, const Polynomial& p) const {
  std::vector<Monomial> out;
  out.reserve(p.size());
  for (const Monomial& m : p) {
    Coeff k = coeffs_.mul(c, m.coeff);
    if (!Ring::is_zero(k)) out.push_back({std::move(k), m.term * t});
  }
  return Polynomial(std::move(out));
}

Polynomial PolyRing::mul(const Polynomial& p, const Polynomial& q) const {
  Polynomial acc;
  for (const Monomial& m : p) acc = add(acc, mul_monomial(m.coeff, m.term, q));
  return acc;
}

Polynomial PolyRing::combine(std::span<const Polynomial> cofactors, std::span<const Polynomial> polys) const {
  if (cofactors.size() != polys.size()) throw std::invalid_argument("cofactor count does not match polynomial count");
  Polynomial acc;
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (!cofactors[i].is_zero()) acc = add(acc, mul(cofactors[i], polys[i]));
  return acc;
}

Polynomial PolyRing::normalize_head(const Polynomial& p) const {
  if (p.is_zero()) return p;
  return scale(coeffs_.normalizing_unit(p.head_coeff()), p);
}

}  // namespace ringgb
