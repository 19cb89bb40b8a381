#ifndef RINGGB_REDUCTION_HPP
#define RINGGB_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "ringgb/polynomial.hpp"

namespace ringgb {

// One step p -> p - quotient * cofactor * basis[reducer]. The monomial c*target
// of p satisfies target = cofactor * HT(basis[reducer]) and
// c = quotient * HC(basis[reducer]) + d with c -> d in the coefficient ring.
struct ReductionStep {
  std::size_t reducer;
  Term target;
  Term cofactor;
  Coeff quotient;
};

/// Which of the applicable steps to take. The default scans monomials from the
/// largest term down and tries reducers in index order. A randomized strategy
/// picks uniformly among all applicable (monomial, reducer) steps.
class ReductionStrategy {
 public:
  static ReductionStrategy first_valid() { return ReductionStrategy(); }
  static ReductionStrategy randomized(std::uint64_t seed);

  bool is_randomized() const noexcept { return rng_.has_value(); }

 private:
  friend std::optional<ReductionStep> find_reduction(const PolyRing&, const Polynomial&,
                                                     std::span<const Polynomial>, ReductionStrategy&);
  ReductionStrategy() = default;

  std::optional<std::mt19937_64> rng_;
};

class StepLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NormalFormOptions {
  bool track_cofactors = false;
  std::size_t max_steps = 10'000'000;
};

// p = sum cofactors[i] * basis[i] + remainder when cofactors are tracked.
struct NormalForm {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;
  std::size_t steps = 0;
};

std::optional<ReductionStep> find_reduction(const PolyRing& ring, const Polynomial& p,
                                            std::span<const Polynomial> basis, ReductionStrategy& strategy);
std::optional<ReductionStep> find_reduction(const PolyRing& ring, const Polynomial& p,
                                            std::span<const Polynomial> basis);

// Throws std::invalid_argument when the step does not match p and basis.
Polynomial apply_step(const PolyRing& ring, const Polynomial& p, const ReductionStep& step,
                      std::span<const Polynomial> basis);

// Reduces to a fixpoint. Any monomial may be rewritten, not just the head, so
// the remainder is fully irreducible. Throws StepLimitExceeded past
// options.max_steps.
NormalForm normal_form(const PolyRing& ring, const Polynomial& p, std::span<const Polynomial> basis,
                       ReductionStrategy& strategy, const NormalFormOptions& options = {});
NormalForm normal_form(const PolyRing& ring, const Polynomial& p, std::span<const Polynomial> basis,
                       const NormalFormOptions& options = {});

bool reduces_to_zero(const PolyRing& ring, const Polynomial& p, std::span<const Polynomial> basis);

}  // namespace ringgb

#endif  // RINGGB_REDUCTION_HPP
