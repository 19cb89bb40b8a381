#include "ringgb/term.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace ringgb {

namespace {

void check_arity(std::size_t n) {
  if (n > kMaxVariables)
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables are supported");
}

void check_same_size(const Term& a, const Term& b) {
  if (a.size() != b.size()) throw std::invalid_argument("terms over different variable counts");
}

}  // namespace

Term::Term(std::size_t nvars) : size_(nvars) { check_arity(nvars); }

Term::Term(std::initializer_list<Exponent> exponents) : Term(std::span<const Exponent>(exponents.begin(), exponents.size())) {}

Term::Term(std::span<const Exponent> exponents) : size_(exponents.size()) {
  check_arity(size_);
  std::copy(exponents.begin(), exponents.end(), exps_.begin());
}

void Term::set(std::size_t i, Exponent e) {
  if (i >= size_) throw std::out_of_range("variable index out of range");
  exps_[i] = e;
}

std::uint64_t Term::degree() const noexcept {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < size_; ++i) d += exps_[i];
  return d;
}

bool Term::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.begin() + size_, [](Exponent e) { return e == 0; });
}

Term Term::operator*(const Term& other) const {
  check_same_size(*this, other);
  Term out(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] > std::numeric_limits<Exponent>::max() - other.exps_[i])
      throw std::overflow_error("exponent overflow in term product");
    out.exps_[i] = exps_[i] + other.exps_[i];
  }
  return out;
}

Term Term::operator/(const Term& other) const {
  if (!divides(other, *this)) throw std::invalid_argument("term quotient is not exact");
  Term out(size_);
  for (std::size_t i = 0; i < size_; ++i) out.exps_[i] = exps_[i] - other.exps_[i];
  return out;
}

bool divides(const Term& t1, const Term& t2) {
  check_same_size(t1, t2);
  for (std::size_t i = 0; i < t1.size(); ++i)
    if (t1[i] > t2[i]) return false;
  return true;
}

Term lcm(const Term& t1, const Term& t2) {
  check_same_size(t1, t2);
  Term out(t1.size());
  for (std::size_t i = 0; i < t1.size(); ++i) out.set(i, std::max(t1[i], t2[i]));
  return out;
}

std::vector<Term> min_terms(std::span<const Term> terms) {
  std::vector<Term> out;
  for (const Term& t : terms) {
    bool dominated = std::any_of(terms.begin(), terms.end(), [&](const Term& u) { return u != t && divides(u, t); });
    if (!dominated && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  return out;
}

TermOrder::TermOrder(OrderKind kind, std::size_t nvars) : kind_(kind), precedence_(nvars) {
  check_arity(nvars);
  for (std::size_t i = 0; i < nvars; ++i) precedence_[i] = i;
}

TermOrder::TermOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  check_arity(precedence_.size());
  std::vector<bool> seen(precedence_.size(), false);
  for (std::size_t v : precedence_) {
    if (v >= precedence_.size() || seen[v]) throw std::invalid_argument("variable precedence is not a permutation");
    seen[v] = true;
  }
}

std::strong_ordering TermOrder::compare(const Term& a, const Term& b) const {
  if (a.size() != precedence_.size() || b.size() != precedence_.size())
    throw std::invalid_argument("term does not match the order's variable count");
  if (kind_ == OrderKind::deglex) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  }
  for (std::size_t v : precedence_) {
    if (auto c = a[v] <=> b[v]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace ringgb
