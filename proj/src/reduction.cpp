#include "ringgb/reduction.hpp"

#include <string>

namespace ringgb {

namespace {

void require_nonzero(std::span<const Polynomial> basis) {
  for (const Polynomial& b : basis)
    if (b.is_zero()) throw std::invalid_argument("reduction basis contains the zero polynomial");
}

std::optional<ReductionStep> step_for(const PolyRing& ring, const Monomial& m, std::span<const Polynomial> basis,
                                      std::size_t i) {
  const Polynomial& b = basis[i];
  if (!divides(b.head_term(), m.term)) return std::nullopt;
  auto red = ring.coeffs().reduce_step(m.coeff, b.head_coeff());
  if (!red) return std::nullopt;
  return ReductionStep{i, m.term, m.term / b.head_term(), std::move(red->quotient)};
}

// First valid step among monomials at index >= from, reducers in index order.
std::optional<ReductionStep> first_step(const PolyRing& ring, const Polynomial& p, std::span<const Polynomial> basis,
                                        std::size_t from, std::size_t* at) {
  const auto& mons = p.monomials();
  for (std::size_t k = from; k < mons.size(); ++k) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (auto s = step_for(ring, mons[k], basis, i)) {
        if (at) *at = k;
        return s;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ReductionStrategy ReductionStrategy::randomized(std::uint64_t seed) {
  ReductionStrategy s;
  s.rng_.emplace(seed);
  return s;
}

std::optional<ReductionStep> find_reduction(const PolyRing& ring, const Polynomial& p,
                                            std::span<const Polynomial> basis, ReductionStrategy& strategy) {
  require_nonzero(basis);
  if (!strategy.rng_) return first_step(ring, p, basis, 0, nullptr);

  std::vector<ReductionStep> candidates;
  for (const Monomial& m : p)
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (auto s = step_for(ring, m, basis, i)) candidates.push_back(std::move(*s));
  if (candidates.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  return std::move(candidates[pick(*strategy.rng_)]);
}

std::optional<ReductionStep> find_reduction(const PolyRing& ring, const Polynomial& p,
                                            std::span<const Polynomial> basis) {
  ReductionStrategy s = ReductionStrategy::first_valid();
  return find_reduction(ring, p, basis, s);
}

Polynomial apply_step(const PolyRing& ring, const Polynomial& p, const ReductionStep& step,
                      std::span<const Polynomial> basis) {
  if (step.reducer >= basis.size()) throw std::invalid_argument("reduction step names a missing reducer");
  const Polynomial& b = basis[step.reducer];
  if (b.is_zero()) throw std::invalid_argument("reduction step uses the zero polynomial");
  const Coeff* c = p.coefficient_of(step.target);
  if (c == nullptr || step.cofactor * b.head_term() != step.target)
    throw std::invalid_argument("stale reduction step: target term mismatch");
  auto red = ring.coeffs().reduce_step(*c, b.head_coeff());
  if (!red || red->quotient != step.quotient)
    throw std::invalid_argument("stale reduction step: coefficient mismatch");
  return ring.sub(p, ring.mul_monomial(step.quotient, step.cofactor, b));
}

NormalForm normal_form(const PolyRing& ring, const Polynomial& p, std::span<const Polynomial> basis,
                       ReductionStrategy& strategy, const NormalFormOptions& options) {
  require_nonzero(basis);
  NormalForm out;
  out.remainder = p;
  if (options.track_cofactors) out.cofactors.assign(basis.size(), Polynomial{});

  // Under the default strategy, monomials above the last rewritten term never
  // change, so the scan resumes there.
  std::size_t resume = 0;
  while (true) {
    std::optional<ReductionStep> step;
    if (strategy.is_randomized()) {
      step = find_reduction(ring, out.remainder, basis, strategy);
    } else {
      step = first_step(ring, out.remainder, basis, resume, &resume);
    }
    if (!step) break;
    if (++out.steps > options.max_steps)
      throw StepLimitExceeded("normal form exceeded " + std::to_string(options.max_steps) + " reduction steps");
    const Polynomial& b = basis[step->reducer];
    out.remainder = ring.sub(out.remainder, ring.mul_monomial(step->quotient, step->cofactor, b));
    if (options.track_cofactors) {
      Polynomial& q = out.cofactors[step->reducer];
      q = ring.add(q, ring.monomial(step->quotient, step->cofactor));
    }
  }
  return out;
}

NormalForm normal_form(const PolyRing& ring, const Polynomial& p, std::span<const Polynomial> basis,
                       const NormalFormOptions& options) {
  ReductionStrategy s = ReductionStrategy::first_valid();
  return normal_form(ring, p, basis, s, options);
}

bool reduces_to_zero(const PolyRing& ring, const Polynomial& p, std::span<const Polynomial> basis) {
  return normal_form(ring, p, basis).remainder.is_zero();
}

}  // namespace ringgb
