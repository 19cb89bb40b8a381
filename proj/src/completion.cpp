#include "ringgb/completion.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ringgb/critical_pairs.hpp"
#include "ringgb/reduction.hpp"

namespace ringgb {

namespace {

using Certificate = std::vector<Polynomial>;

Certificate add_scaled(const PolyRing& ring, Certificate acc, const Coeff& c, const Term& t, const Certificate& x) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = ring.add(acc[i], ring.mul_monomial(c, t, x[i]));
  return acc;
}

// Tie-break for equal head terms. Normalized field heads are all 1.
bool head_coeff_smaller(const Polynomial& a, const Polynomial& b) {
  return abs(a.head_coeff()) < abs(b.head_coeff());
}

}  // namespace

CompletionTrace complete(const PolyRing& ring, std::span<const Polynomial> generators,
                         const CompletionOptions& options) {
  CompletionTrace trace;
  const std::size_t ngens = generators.size();
  for (std::size_t i = 0; i < ngens; ++i) {
    if (generators[i].is_zero()) continue;
    trace.basis.push_back(generators[i]);
    if (options.track_certificates) {
      Certificate unit(ngens);
      unit[i] = ring.constant(ring.coeffs().from_integer(1));
      trace.certificates.push_back(std::move(unit));
    }
  }

  std::set<PairRecord, PairOrder> queue(PairOrder{&ring.order()});
  auto enqueue_against = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Term t = lcm(trace.basis[i].head_term(), trace.basis[j].head_term());
      queue.insert({i, j, t, PairKind::g});
      queue.insert({i, j, t, PairKind::m});
    }
  };
  for (std::size_t j = 0; j < trace.basis.size(); ++j) enqueue_against(j);

  NormalFormOptions nf_options;
  nf_options.track_cofactors = options.track_certificates;

  while (!queue.empty()) {
    PairRecord record = *queue.begin();
    queue.erase(queue.begin());
    ++trace.iterations;

    for (PairPolynomial& pp : pair_polynomials(ring, record, trace.basis)) {
      if (++trace.pairs_processed > options.max_pair_reductions)
        throw CompletionLimitExceeded("completion exceeded " + std::to_string(options.max_pair_reductions) +
                                      " pair reductions");
      NormalForm nf = normal_form(ring, pp.value, trace.basis, nf_options);
      if (nf.remainder.is_zero()) continue;

      if (options.track_certificates) {
        // nf = a1*s1*b_i + a2*s2*b_j - sum q_k*b_k
        Certificate cert(ngens);
        cert = add_scaled(ring, std::move(cert), pp.first_coeff, pp.first_shift, trace.certificates[record.i]);
        cert = add_scaled(ring, std::move(cert), pp.second_coeff, pp.second_shift, trace.certificates[record.j]);
        for (std::size_t k = 0; k < nf.cofactors.size(); ++k) {
          for (const Monomial& m : nf.cofactors[k])
            cert = add_scaled(ring, std::move(cert), ring.coeffs().neg(m.coeff), m.term, trace.certificates[k]);
        }
        trace.certificates.push_back(std::move(cert));
      }
      trace.added.push_back(nf.remainder);
      trace.basis.push_back(std::move(nf.remainder));
      enqueue_against(trace.basis.size() - 1);
    }
  }
  return trace;
}

std::vector<Polynomial> interreduce(const PolyRing& ring, std::span<const Polynomial> basis) {
  std::vector<Polynomial> heads_normalized;
  for (const Polynomial& p : basis)
    if (!p.is_zero()) heads_normalized.push_back(ring.normalize_head(p));

  const TermOrder& ord = ring.order();
  std::stable_sort(heads_normalized.begin(), heads_normalized.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (auto c = ord.compare(a.head_term(), b.head_term()); c != 0) return c < 0;
    return head_coeff_smaller(a, b);
  });

  // Any head monomial dividing another sorts before it.
  std::vector<Polynomial> minimal;
  for (Polynomial& p : heads_normalized) {
    bool covered = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& h) {
      return divides(h.head_term(), p.head_term()) && ring.coeffs().divides(h.head_coeff(), p.head_coeff());
    });
    if (!covered) minimal.push_back(std::move(p));
  }

  // Heads are now irreducible by each other, so tail reduction leaves every
  // head in place and a single pass reaches the fixpoint.
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (const Polynomial& p : minimal) {
    Polynomial tail = normal_form(ring, p.rest(), minimal).remainder;
    out.push_back(ring.add(ring.monomial(p.head_coeff(), p.head_term()), tail));
  }
  std::sort(out.begin(), out.end(),
            [&](const Polynomial& a, const Polynomial& b) { return ord.greater(a.head_term(), b.head_term()); });
  return out;
}

bool is_gb_certificate(const PolyRing& ring, std::span<const Polynomial> basis) {
  for (const PairRecord& record : all_pairs(ring, basis)) {
    for (const PairPolynomial& pp : pair_polynomials(ring, record, basis))
      if (!reduces_to_zero(ring, pp.value, basis)) return false;
  }
  return true;
}

Membership ideal_membership(const PolyRing& ring, const Polynomial& p, std::span<const Polynomial> generators,
                            const CompletionOptions& options) {
  CompletionOptions opts = options;
  opts.track_certificates = true;
  CompletionTrace trace = complete(ring, generators, opts);

  NormalFormOptions nf_options;
  nf_options.track_cofactors = true;
  NormalForm nf = normal_form(ring, p, trace.basis, nf_options);

  Membership out;
  out.member = nf.remainder.is_zero();
  out.normal_form = std::move(nf.remainder);
  if (out.member) {
    out.certificate.assign(generators.size(), Polynomial{});
    for (std::size_t k = 0; k < nf.cofactors.size(); ++k) {
      if (nf.cofactors[k].is_zero()) continue;
      for (std::size_t i = 0; i < generators.size(); ++i)
        out.certificate[i] = ring.add(out.certificate[i], ring.mul(nf.cofactors[k], trace.certificates[k][i]));
    }
  }
  return out;
}

}  // namespace ringgb
