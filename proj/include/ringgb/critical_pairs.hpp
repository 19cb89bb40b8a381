#ifndef RINGGB_CRITICAL_PAIRS_HPP
#define RINGGB_CRITICAL_PAIRS_HPP

#include <span>
#include <vector>

#include "ringgb/polynomial.hpp"

namespace ringgb {

enum class PairKind { g, m };

// Pending critical-pair obligation between basis[i] and basis[j], i < j.
struct PairRecord {
  std::size_t i;
  std::size_t j;
  Term lcm;
  PairKind kind;

  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

// Selection order: ascending lcm term, then ascending (i, j), G before M.
struct PairOrder {
  const TermOrder* order;
  bool operator()(const PairRecord& a, const PairRecord& b) const;
};

// value = first_coeff * first_shift * p1 + second_coeff * second_shift * p2,
// with first_shift * HT(p1) = second_shift * HT(p2) = lcm(HT(p1), HT(p2)).
struct PairPolynomial {
  Polynomial value;
  Coeff first_coeff;
  Term first_shift;
  Coeff second_coeff;
  Term second_shift;
};

/// G-polynomials of (p1, p2): for each element g of the coefficient Groebner
/// basis of (HC(p1), HC(p2)) with representation g = h1*HC(p1) + h2*HC(p2),
/// h1*s1*p1 + h2*s2*p2. Its head monomial is g*t where t is the head-term lcm.
std::vector<PairPolynomial> g_polynomials(const PolyRing& ring, const Polynomial& p1, const Polynomial& p2);

/// M-polynomials of (p1, p2): for each syzygy <b1, b2> of the head
/// coefficients, b1*s1*p1 + b2*s2*p2. The lcm term cancels, so the head term
/// is strictly below t.
std::vector<PairPolynomial> m_polynomials(const PolyRing& ring, const Polynomial& p1, const Polynomial& p2);

// Dispatches on record.kind for basis[record.i], basis[record.j].
std::vector<PairPolynomial> pair_polynomials(const PolyRing& ring, const PairRecord& record,
                                             std::span<const Polynomial> basis);

// One G and one M record per unordered index pair, in selection order.
std::vector<PairRecord> all_pairs(const PolyRing& ring, std::span<const Polynomial> basis);

}  // namespace ringgb

#endif  // RINGGB_CRITICAL_PAIRS_HPP
