#include "ringgb/coeff_ring.hpp"

#include <sstream>

namespace ringgb {

ExtendedGcd extended_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class old_r = a, r = b;
  mpz_class old_s = 1, s = 0;
  mpz_class old_t = 0, t = 1;
  while (r != 0) {
    mpz_class q = old_r / r;
    mpz_class tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Ring Ring::prime_field(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
    throw RingError("gf(p) requires a prime modulus, got " + p.get_str());
  return Ring(RingKind::prime_field, p);
}

Ring Ring::rationals() { return Ring(RingKind::rationals, 0); }

Ring Ring::integers() { return Ring(RingKind::integers, 0); }

Ring Ring::parse(std::string_view text) {
  if (text == "qq") return rationals();
  if (text == "zz") return integers();
  if (text.size() > 4 && text.substr(0, 3) == "gf(" && text.back() == ')') {
    std::string_view digits = text.substr(3, text.size() - 4);
    bool all_digits = !digits.empty();
    for (char ch : digits) all_digits = all_digits && ch >= '0' && ch <= '9';
    if (all_digits) return prime_field(mpz_class(std::string(digits)));
  }
  throw RingError("unknown ring '" + std::string(text) + "' (expected gf(p), qq or zz)");
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::prime_field:
      return "gf(" + modulus_.get_str() + ")";
    case RingKind::rationals:
      return "qq";
    case RingKind::integers:
      return "zz";
  }
  return {};
}

Coeff Ring::canonical_residue(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
  return Coeff(r);
}

Coeff Ring::from_integer(const mpz_class& value) const {
  if (kind_ == RingKind::prime_field) return canonical_residue(value);
  return Coeff(value);
}

Coeff Ring::from_rational(const mpq_class& raw) const {
  mpq_class value = raw;
  value.canonicalize();
  switch (kind_) {
    case RingKind::rationals:
      return value;
    case RingKind::integers:
      if (value.get_den() != 1)
        throw RingError("non-integer coefficient " + value.get_str() + " over zz");
      return value;
    case RingKind::prime_field: {
      mpz_class den = value.get_den();
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t()) == 0)
        throw RingError("denominator " + den.get_str() + " is not invertible in " + name());
      return canonical_residue(value.get_num() * inv);
    }
  }
  return value;
}

bool Ring::is_canonical(const Coeff& c) const {
  switch (kind_) {
    case RingKind::rationals: {
      if (c.get_den() <= 0) return false;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
      return g == 1;
    }
    case RingKind::integers:
      return c.get_den() == 1;
    case RingKind::prime_field:
      return c.get_den() == 1 && c.get_num() >= 0 && c.get_num() < modulus_;
  }
  return false;
}

void Ring::require_member(const Coeff& a) const {
  if (!is_canonical(a)) throw RingError("value " + a.get_str() + " is not a canonical element of " + name());
}

Coeff Ring::add(const Coeff& a, const Coeff& b) const {
  if (kind_ == RingKind::prime_field) return canonical_residue(a.get_num() + b.get_num());
  return Coeff(a + b);
}

Coeff Ring::sub(const Coeff& a, const Coeff& b) const {
  if (kind_ == RingKind::prime_field) return canonical_residue(a.get_num() - b.get_num());
  return Coeff(a - b);
}

Coeff Ring::mul(const Coeff& a, const Coeff& b) const {
  if (kind_ == RingKind::prime_field) return canonical_residue(a.get_num() * b.get_num());
  return Coeff(a * b);
}

Coeff Ring::neg(const Coeff& a) const {
  if (kind_ == RingKind::prime_field) return canonical_residue(-a.get_num());
  return Coeff(-a);
}

bool Ring::is_unit(const Coeff& a) const {
  if (is_field()) return !is_zero(a);
  return abs(a) == 1;
}

Coeff Ring::inverse(const Coeff& a) const {
  if (!is_unit(a)) throw RingError(a.get_str() + " is not a unit in " + name());
  switch (kind_) {
    case RingKind::prime_field: {
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), a.get_num_mpz_t(), modulus_.get_mpz_t());
      return Coeff(inv);
    }
    case RingKind::rationals:
      return Coeff(1 / a);
    case RingKind::integers:
      return a;
  }
  return a;
}

bool Ring::divides(const Coeff& b, const Coeff& a) const {
  if (is_zero(b)) return is_zero(a);
  if (is_field()) return true;
  return mpz_divisible_p(a.get_num_mpz_t(), b.get_num_mpz_t()) != 0;
}

Coeff Ring::exact_quotient(const Coeff& a, const Coeff& b) const {
  if (is_zero(b)) throw RingError("division by zero");
  if (is_field()) return mul(a, inverse(b));
  if (!divides(b, a)) throw RingError(b.get_str() + " does not divide " + a.get_str());
  return Coeff(a.get_num() / b.get_num());
}

Coeff Ring::normalizing_unit(const Coeff& a) const {
  if (is_zero(a)) return from_integer(1);
  if (is_field()) return inverse(a);
  return Coeff(sgn(a) < 0 ? -1 : 1);
}

std::optional<CoeffReduction> Ring::reduce_step(const Coeff& c, const Coeff& b) const {
  if (is_zero(b)) throw RingError("cannot reduce by zero");
  if (is_zero(c)) return std::nullopt;
  if (is_field()) return CoeffReduction{exact_quotient(c, b), from_integer(0)};

  // Symmetric remainder in (-|b|/2, |b|/2].
  const mpz_class& cn = c.get_num();
  const mpz_class& bn = b.get_num();
  mpz_class m = abs(bn);
  mpz_class d;
  mpz_fdiv_r(d.get_mpz_t(), cn.get_mpz_t(), m.get_mpz_t());
  if (2 * d > m) d -= m;
  if (d == cn) return std::nullopt;
  return CoeffReduction{Coeff((cn - d) / bn), Coeff(d)};
}

CoeffGroebner Ring::groebner(std::span<const Coeff> elements) const {
  if (elements.empty()) throw RingError("groebner basis of an empty set of ring elements");
  for (const Coeff& e : elements) {
    require_member(e);
    if (is_zero(e)) throw RingError("groebner basis input contains zero");
  }
  const std::size_t n = elements.size();
  CoeffGroebner out;

  if (is_field()) {
    out.basis = {from_integer(1)};
    std::vector<Coeff> row(n, from_integer(0));
    row[0] = inverse(elements[0]);
    out.to_basis.push_back(std::move(row));
    for (const Coeff& e : elements) out.from_basis.push_back({e});
    return out;
  }

  mpz_class g = abs(elements[0].get_num());
  std::vector<mpz_class> rep{mpz_class(sgn(elements[0]))};
  for (std::size_t k = 1; k < n; ++k) {
    ExtendedGcd eg = extended_gcd(g, elements[k].get_num());
    for (mpz_class& r : rep) r *= eg.x;
    rep.push_back(eg.y);
    g = eg.gcd;
  }
  out.basis = {Coeff(g)};
  std::vector<Coeff> row;
  for (const mpz_class& r : rep) row.emplace_back(r);
  out.to_basis.push_back(std::move(row));
  for (const Coeff& e : elements) out.from_basis.push_back({Coeff(e.get_num() / g)});
  return out;
}

std::vector<SyzygyVector> Ring::syzygies(std::span<const Coeff> coeffs) const {
  if (coeffs.size() != 2) {
    std::ostringstream msg;
    msg << "unsupported syzygy arity " << coeffs.size() << " over " << name()
        << ": only pairs are supported for principal ideal domains";
    throw RingError(msg.str());
  }
  for (const Coeff& c : coeffs) {
    require_member(c);
    if (is_zero(c)) throw RingError("syzygy input contains zero");
  }
  const Coeff& a = coeffs[0];
  const Coeff& b = coeffs[1];
  if (is_field()) return {{inverse(a), neg(inverse(b))}};

  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  return {{Coeff(l / a.get_num()), Coeff(-(l / b.get_num()))}};
}

}  // namespace ringgb
