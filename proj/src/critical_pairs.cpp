#include "ringgb/critical_pairs.hpp"

#include <algorithm>
#include <stdexcept>

namespace ringgb {

namespace {

struct Shifts {
  Term lcm;
  Term first;
  Term second;
};

Shifts shifts_of(const Polynomial& p1, const Polynomial& p2) {
  if (p1.is_zero() || p2.is_zero()) throw std::invalid_argument("critical pair of a zero polynomial");
  Term t = lcm(p1.head_term(), p2.head_term());
  return {t, t / p1.head_term(), t / p2.head_term()};
}

PairPolynomial combine_pair(const PolyRing& ring, const Coeff& a1, const Shifts& s, const Polynomial& p1,
                            const Coeff& a2, const Polynomial& p2) {
  Polynomial v = ring.add(ring.mul_monomial(a1, s.first, p1), ring.mul_monomial(a2, s.second, p2));
  return {std::move(v), a1, s.first, a2, s.second};
}

}  // namespace

bool PairOrder::operator()(const PairRecord& a, const PairRecord& b) const {
  if (auto c = order->compare(a.lcm, b.lcm); c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  if (a.j != b.j) return a.j < b.j;
  return a.kind == PairKind::g && b.kind == PairKind::m;
}

std::vector<PairPolynomial> g_polynomials(const PolyRing& ring, const Polynomial& p1, const Polynomial& p2) {
  Shifts s = shifts_of(p1, p2);
  const Coeff heads[] = {p1.head_coeff(), p2.head_coeff()};
  CoeffGroebner gb = ring.coeffs().groebner(heads);
  std::vector<PairPolynomial> out;
  for (const auto& row : gb.to_basis) out.push_back(combine_pair(ring, row[0], s, p1, row[1], p2));
  return out;
}

std::vector<PairPolynomial> m_polynomials(const PolyRing& ring, const Polynomial& p1, const Polynomial& p2) {
  Shifts s = shifts_of(p1, p2);
  const Coeff heads[] = {p1.head_coeff(), p2.head_coeff()};
  std::vector<PairPolynomial> out;
  for (const SyzygyVector& syz : ring.coeffs().syzygies(heads))
    out.push_back(combine_pair(ring, syz[0], s, p1, syz[1], p2));
  return out;
}

std::vector<PairPolynomial> pair_polynomials(const PolyRing& ring, const PairRecord& record,
                                             std::span<const Polynomial> basis) {
  if (record.i >= basis.size() || record.j >= basis.size()) throw std::out_of_range("pair index out of range");
  const Polynomial& p1 = basis[record.i];
  const Polynomial& p2 = basis[record.j];
  return record.kind == PairKind::g ? g_polynomials(ring, p1, p2) : m_polynomials(ring, p1, p2);
}

std::vector<PairRecord> all_pairs(const PolyRing& ring, std::span<const Polynomial> basis) {
  std::vector<PairRecord> out;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Term t = shifts_of(basis[i], basis[j]).lcm;
      out.push_back({i, j, t, PairKind::g});
      out.push_back({i, j, t, PairKind::m});
    }
  }
  std::sort(out.begin(), out.end(), PairOrder{&ring.order()});
  return out;
}

}  // namespace ringgb
