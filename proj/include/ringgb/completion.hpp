#ifndef RINGGB_COMPLETION_HPP
#define RINGGB_COMPLETION_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "ringgb/polynomial.hpp"

namespace ringgb {

struct CompletionOptions {
  // Safety valve on the number of critical polynomials reduced.
  std::size_t max_pair_reductions = 1'000'000;
  bool track_certificates = true;
};

class CompletionLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CompletionTrace {
  // Pair records taken from the queue.
  std::size_t iterations = 0;
  // G- and M-polynomials whose normal form was computed.
  std::size_t pairs_processed = 0;
  // Nonzero normal forms appended to the basis, in order.
  std::vector<Polynomial> added;
  std::vector<Polynomial> basis;
  // basis[k] = sum_i certificates[k][i] * generators[i] over the generator
  // list exactly as passed in, zeros included. Empty unless tracked.
  std::vector<std::vector<Polynomial>> certificates;
};

/// Critical-pair completion. Starts from the nonzero generators, drains the
/// pair queue smallest-lcm first, and appends every nonzero normal form of a
/// G- or M-polynomial, queueing its pairs against all earlier elements. Stops
/// when the queue is empty. Throws CompletionLimitExceeded when
/// options.max_pair_reductions is exceeded.
///
/// Worked example over QQ, lex x > y, {x^2 - y, xy - 1}: the M-polynomial of
/// the pair is y(x^2 - y) - x(xy - 1) = x - y^2, irreducible, so it is added.
/// The pair (xy - 1, x - y^2) has M-polynomial (xy - 1) - y(x - y^2) = y^3 - 1,
/// also added; every remaining pair then reduces to 0.
CompletionTrace complete(const PolyRing& ring, std::span<const Polynomial> generators,
                         const CompletionOptions& options = {});

/// Canonical form of a Groebner basis: heads normalized (monic, or positive
/// over ZZ), elements whose head monomial is divisible by another head monomial
/// dropped, tails fully reduced. Sorted descending by head term.
std::vector<Polynomial> interreduce(const PolyRing& ring, std::span<const Polynomial> basis);

// True iff every pairwise G- and M-polynomial of basis reduces to 0 by basis.
bool is_gb_certificate(const PolyRing& ring, std::span<const Polynomial> basis);

struct Membership {
  bool member = false;
  Polynomial normal_form;
  // p = sum certificate[i] * generators[i]; empty when not a member.
  std::vector<Polynomial> certificate;
};

Membership ideal_membership(const PolyRing& ring, const Polynomial& p, std::span<const Polynomial> generators,
                            const CompletionOptions& options = {});

}  // namespace ringgb

#endif  // RINGGB_COMPLETION_HPP
