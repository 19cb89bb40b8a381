#include <gtest/gtest.h>

#include "ringgb/completion.hpp"
#include "ringgb/reduction.hpp"
#include "test_support.hpp"

using namespace ringgb;
using namespace ringgb::testing;

namespace {

bool contains(const std::vector<Polynomial>& v, const Polynomial& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

void expect_certificates_exact(const PolyRing& r, const CompletionTrace& trace, const std::vector<Polynomial>& gens) {
  ASSERT_EQ(trace.certificates.size(), trace.basis.size());
  for (std::size_t k = 0; k < trace.basis.size(); ++k) EXPECT_EQ(r.combine(trace.certificates[k], gens), trace.basis[k]);
}

}  // namespace

TEST(Complete, TextbookFieldExample) {
  PolyRing qq = make_ring(Ring::rationals());
  std::vector<Polynomial> gens = Ps(qq, {"x^2 - y", "x*y - 1"});
  CompletionTrace trace = complete(qq, gens);
  EXPECT_TRUE(contains(trace.basis, P(qq, "x - y^2")));
  EXPECT_TRUE(contains(trace.basis, P(qq, "y^3 - 1")));
  for (const Polynomial& g : gens) EXPECT_TRUE(reduces_to_zero(qq, g, trace.basis));
  expect_certificates_exact(qq, trace, gens);
  EXPECT_EQ(trace.basis.size(), gens.size() + trace.added.size());
  EXPECT_GE(trace.iterations, 1u);
  EXPECT_EQ(interreduce(qq, trace.basis), Ps(qq, {"x - y^2", "y^3 - 1"}));
}

TEST(Complete, IntegerExampleNeedsGPolynomial) {
  PolyRing zz = make_ring(Ring::integers());
  std::vector<Polynomial> gens = Ps(zz, {"2*x", "3*y"});
  CompletionTrace trace = complete(zz, gens);
  EXPECT_EQ(trace.basis, Ps(zz, {"2*x", "3*y", "x*y"}));
  EXPECT_EQ(trace.added, Ps(zz, {"x*y"}));
  expect_certificates_exact(zz, trace, gens);
  EXPECT_EQ(interreduce(zz, trace.basis), Ps(zz, {"x*y", "2*x", "3*y"}));
}

TEST(Complete, IntegerSameHeadTerm) {
  PolyRing zz = make_ring(Ring::integers(), {"x"});
  std::vector<Polynomial> gens = Ps(zz, {"4*x", "6*x"});
  CompletionTrace trace = complete(zz, gens);
  EXPECT_EQ(trace.basis, Ps(zz, {"4*x", "6*x", "2*x"}));
  EXPECT_EQ(interreduce(zz, trace.basis), Ps(zz, {"2*x"}));
}

TEST(Complete, SingletonAndZeros) {
  PolyRing zz = make_ring(Ring::integers());
  std::vector<Polynomial> one = Ps(zz, {"3*x*y + 2"});
  CompletionTrace trace = complete(zz, one);
  EXPECT_EQ(trace.basis, one);
  EXPECT_EQ(trace.iterations, 0u);

  std::vector<Polynomial> zeros{Polynomial{}, Polynomial{}};
  EXPECT_TRUE(complete(zz, zeros).basis.empty());
  EXPECT_TRUE(complete(zz, std::vector<Polynomial>{}).basis.empty());

  std::vector<Polynomial> mixed{Polynomial{}, P(zz, "2*x"), Polynomial{}, P(zz, "3*y")};
  CompletionTrace t2 = complete(zz, mixed);
  EXPECT_EQ(t2.basis.size(), 3u);
  expect_certificates_exact(zz, t2, mixed);
}

TEST(Complete, StepCeilingIsADistinctFailure) {
  PolyRing qq = make_ring(Ring::rationals());
  CompletionOptions opts;
  opts.max_pair_reductions = 1;
  EXPECT_THROW(complete(qq, Ps(qq, {"x^2 - y", "x*y - 1"}), opts), CompletionLimitExceeded);
}

TEST(Interreduce, Examples) {
  PolyRing qq = make_ring(Ring::rationals());
  EXPECT_EQ(interreduce(qq, Ps(qq, {"x^2 - y", "x*y - 1", "x - y^2", "y^3 - 1"})), Ps(qq, {"x - y^2", "y^3 - 1"}));
  EXPECT_EQ(interreduce(qq, Ps(qq, {"2*x"})), Ps(qq, {"x"}));
  PolyRing zz = make_ring(Ring::integers());
  EXPECT_EQ(interreduce(zz, Ps(zz, {"-2*x"})), Ps(zz, {"2*x"}));
  EXPECT_TRUE(interreduce(zz, std::vector<Polynomial>{}).empty());
}

TEST(IsGbCertificate, Examples) {
  PolyRing qq = make_ring(Ring::rationals());
  EXPECT_TRUE(is_gb_certificate(qq, Ps(qq, {"x - y^2", "y^3 - 1"})));
  EXPECT_FALSE(is_gb_certificate(qq, Ps(qq, {"x^2 - y", "x*y - 1"})));
  EXPECT_TRUE(is_gb_certificate(qq, Ps(qq, {"x^5 + y"})));
  PolyRing zz = make_ring(Ring::integers());
  EXPECT_FALSE(is_gb_certificate(zz, Ps(zz, {"2*x", "3*y"})));
  EXPECT_TRUE(is_gb_certificate(zz, Ps(zz, {"2*x", "3*y", "x*y"})));
}

TEST(IdealMembership, Examples) {
  PolyRing qq = make_ring(Ring::rationals(), {"x"});
  std::vector<Polynomial> gx = Ps(qq, {"x - 1"});
  Membership m = ideal_membership(qq, P(qq, "x^3 - 1"), gx);
  EXPECT_TRUE(m.member);
  EXPECT_EQ(qq.combine(m.certificate, gx), P(qq, "x^3 - 1"));

  PolyRing zz = make_ring(Ring::integers());
  std::vector<Polynomial> g = Ps(zz, {"2*x", "3*y"});
  m = ideal_membership(zz, P(zz, "x + y"), g);
  EXPECT_FALSE(m.member);
  EXPECT_EQ(m.normal_form, P(zz, "x + y"));
  EXPECT_TRUE(m.certificate.empty());

  m = ideal_membership(zz, P(zz, "6*x*y"), g);
  EXPECT_TRUE(m.member);
  EXPECT_EQ(zz.combine(m.certificate, g), P(zz, "6*x*y"));

  m = ideal_membership(zz, Polynomial{}, std::vector<Polynomial>{});
  EXPECT_TRUE(m.member);
  EXPECT_FALSE(ideal_membership(zz, P(zz, "1"), std::vector<Polynomial>{}).member);
}

TEST(CompletionProperties, RandomIdeals) {
  RandomPolys gen(7);
  for (const RingCase& rc : corpus_rings()) {
    PolyRing r = make_ring(rc.ring);
    for (int ideal = 0; ideal < 25; ++ideal) {
      std::vector<Polynomial> gens = gen.ideal(r);
      CompletionTrace trace = complete(r, gens);
      expect_certificates_exact(r, trace, gens);
      for (const Polynomial& added : trace.added) EXPECT_FALSE(added.is_zero());
      EXPECT_TRUE(is_gb_certificate(r, trace.basis)) << rc.label;

      // Ideal members reduce to zero.
      for (int k = 0; k < 5; ++k) {
        std::vector<Polynomial> cof;
        for (std::size_t i = 0; i < gens.size(); ++i) cof.push_back(gen.poly(r, 2, -3, 3));
        EXPECT_TRUE(reduces_to_zero(r, r.combine(cof, gens), trace.basis)) << rc.label;
      }

      // Idempotence of completion and interreduction.
      std::vector<Polynomial> reduced = interreduce(r, trace.basis);
      EXPECT_TRUE(is_gb_certificate(r, reduced)) << rc.label;
      EXPECT_TRUE(complete(r, trace.basis).added.empty());
      EXPECT_EQ(interreduce(r, reduced), reduced);
      for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others = reduced;
        others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
        EXPECT_EQ(normal_form(r, reduced[i], others).remainder, reduced[i]) << rc.label;
        EXPECT_EQ(r.normalize_head(reduced[i]), reduced[i]);
      }

      // Same ideal: every reduced element reduces to 0 by the raw basis and
      // every generator by the reduced one.
      for (const Polynomial& g : reduced) EXPECT_TRUE(reduces_to_zero(r, g, trace.basis));
      for (const Polynomial& g : gens) EXPECT_TRUE(reduces_to_zero(r, g, reduced));

      if (r.coeffs().is_field()) EXPECT_EQ(reduced, classical_buchberger(r, gens)) << rc.label;

      // Permuted, unit-scaled generators give the same canonical basis.
      std::vector<Polynomial> shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), gen.engine());
      for (Polynomial& g : shuffled) g = r.scale(gen.unit(r.coeffs()), g);
      EXPECT_EQ(interreduce(r, complete(r, shuffled).basis), reduced) << rc.label;
    }
  }
}

TEST(CompletionProperties, DeglexAndThreeVariables) {
  RandomPolys gen(31);
  for (const RingCase& rc : corpus_rings()) {
    PolyRing r = make_ring(rc.ring, {"x", "y", "z"}, OrderKind::deglex);
    for (int ideal = 0; ideal < 8; ++ideal) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 2; ++k) gens.push_back(gen.nonzero_poly(r, 2, -2, 2, 3));
      CompletionOptions opts;
      opts.track_certificates = false;
      CompletionTrace trace = complete(r, gens, opts);
      EXPECT_TRUE(is_gb_certificate(r, trace.basis)) << rc.label;
      if (r.coeffs().is_field()) EXPECT_EQ(interreduce(r, trace.basis), classical_buchberger(r, gens));
    }
  }
}
