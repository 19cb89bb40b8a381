#ifndef RINGGB_COEFF_RING_HPP
#define RINGGB_COEFF_RING_HPP

#include <gmpxx.h>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ringgb {

// Every ring element is stored as an exact rational. The owning Ring keeps it
// canonical: residues in [0, p) for GF(p), denominator 1 for ZZ.
using Coeff = mpq_class;

// A vector <a_1, ..., a_j> with sum a_i * c_i = 0 for some coefficient tuple c.
using SyzygyVector = std::vector<Coeff>;

enum class RingKind { prime_field, rationals, integers };

class RingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// c = quotient * b + remainder, remainder strictly smaller than c.
struct CoeffReduction {
  Coeff quotient;
  Coeff remainder;
};

// Groebner basis of a finite set of ring elements together with the change of
// basis in both directions:
//   basis[i] = sum_k to_basis[i][k] * input[k]
//   input[k] = sum_i from_basis[k][i] * basis[i]
struct CoeffGroebner {
  std::vector<Coeff> basis;
  std::vector<std::vector<Coeff>> to_basis;
  std::vector<std::vector<Coeff>> from_basis;
};

/// Coefficient ring R of R[x_1, ..., x_n].
///
/// Reduction of one element by another follows the rules
///   - a nonzero multiple of b reduces to 0 by b,
///   - if a -> c by b then a - c is a multiple of b,
///   - if a reduces by b and b reduces by c, then a reduces by c,
/// and is well-founded. Over a field every nonzero element reduces to 0. Over
/// ZZ the remainder is the symmetric one, -|b|/2 < d <= |b|/2, and c is
/// reducible exactly when that remainder differs from c.
///
/// Values are immutable; all members are safe to call concurrently.
class Ring {
 public:
  static Ring prime_field(const mpz_class& p);
  static Ring rationals();
  static Ring integers();

  // "gf(p)", "qq" or "zz".
  static Ring parse(std::string_view text);

  RingKind kind() const noexcept { return kind_; }
  bool is_field() const noexcept { return kind_ != RingKind::integers; }
  // All shipped rings have unique normal forms with respect to their Groebner
  // bases.
  bool admits_strong_gb() const noexcept { return true; }
  // Characteristic p of GF(p); zero otherwise.
  const mpz_class& modulus() const noexcept { return modulus_; }
  std::string name() const;

  Coeff from_integer(const mpz_class& value) const;
  Coeff from_integer(long value) const { return from_integer(mpz_class(value)); }
  // Throws RingError for non-integers over ZZ and for denominators that vanish
  // mod p.
  Coeff from_rational(const mpq_class& value) const;
  bool is_canonical(const Coeff& c) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  static bool is_zero(const Coeff& a) { return sgn(a) == 0; }

  bool is_unit(const Coeff& a) const;
  Coeff inverse(const Coeff& a) const;
  // True iff a is a ring multiple of b.
  bool divides(const Coeff& b, const Coeff& a) const;
  Coeff exact_quotient(const Coeff& a, const Coeff& b) const;
  // Unit u with u * a in normal form: monic over fields, positive over ZZ.
  Coeff normalizing_unit(const Coeff& a) const;

  // One reduction step of c by b, or nullopt when c is in normal form with
  // respect to b. Throws RingError for b = 0.
  std::optional<CoeffReduction> reduce_step(const Coeff& c, const Coeff& b) const;

  // Fields return [1]; ZZ returns [gcd] with a positive gcd whose
  // representation comes from iterated extended Euclid.
  CoeffGroebner groebner(std::span<const Coeff> elements) const;

  // Generators of {a : sum a_i c_i = 0}. Only pairs are supported, which
  // suffices for principal ideal domains: <lcm/c_1, -lcm/c_2>.
  std::vector<SyzygyVector> syzygies(std::span<const Coeff> coeffs) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  Ring(RingKind kind, mpz_class modulus) : kind_(kind), modulus_(std::move(modulus)) {}
  Coeff canonical_residue(const mpz_class& v) const;
  void require_member(const Coeff& a) const;

  RingKind kind_;
  mpz_class modulus_;
};

// Bezout identity g = x * a + y * b with g = gcd(a, b) >= 0.
struct ExtendedGcd {
  mpz_class gcd;
  mpz_class x;
  mpz_class y;
};
ExtendedGcd extended_gcd(const mpz_class& a, const mpz_class& b);

}  // namespace ringgb

#endif  // RINGGB_COEFF_RING_HPP
