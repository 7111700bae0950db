#include "support.hpp"
#include "pblock/errors.hpp"
#include "pblock/group_ring.hpp"
#include "pblock/identities.hpp"

using namespace pblock;
using namespace testing_support;
using nlohmann::json;

namespace {

void require_pass(const CheckResult &r)
{
  INFO(r.name << ": " << r.detail);
  CHECK(r.passed);
  CHECK_FALSE(r.skipped);
  CHECK_FALSE(r.counterexample.has_value());
}

} // namespace

TEST_CASE("N-class sums in R + I(N)G + pRG")
{
  require_pass(check_sbor_a(o_p(cyclic(2), 2), ZpkContext(2, 8)));
  require_pass(check_sbor_a(o_p(s4(), 2), ZpkContext(2, 8)));
  require_pass(check_sbor_a(o_p(s3(), 3), ZpkContext(3, 5)));
}

TEST_CASE("N-class sums with lifted involutions, p = 2")
{
  require_pass(check_sbor_b(d8(), ZpkContext(2, 8)));
  require_pass(check_sbor_b(s4(), ZpkContext(2, 8)));
  require_pass(check_sbor_b(catalog_group("SL(2,3)"), ZpkContext(2, 8)));
  // the lifted involutions for S4 are preimages of the three involutions of S3
  auto lifts = involution_lifts(s4());
  CHECK_FALSE(lifts.empty());
  QuotientMap q = quotient_by(o_p(s4(), 2));
  for (Elem t : lifts)
    CHECK(q.quotient->element_order(q.projection[t]) == 2);
  CHECK_THROWS_AS(check_sbor_b(s3(), ZpkContext(3, 5)), Error);
}

TEST_CASE("commutator span is saturated")
{
  require_pass(check_formula_11(cyclic(4), ZpkContext(2, 8)));
  require_pass(check_formula_11(s3(), ZpkContext(2, 6)));
  require_pass(check_formula_11(d8(), ZpkContext(2, 8)));
}

TEST_CASE("p-th powers of commutators")
{
  require_pass(check_formula_12(s4(), ZpkContext(2, 8), 500, 1));
  require_pass(check_formula_12(s3(), ZpkContext(3, 5), 100, 2));
}

TEST_CASE("power of a sum modulo commutators")
{
  require_pass(check_formula_13(s4(), ZpkContext(2, 8), 1, 1, 50, 3));
  require_pass(check_formula_13(s4(), ZpkContext(2, 8), 2, 1, 50, 3));
  require_pass(check_formula_13(s3(), ZpkContext(3, 5), 3, 2, 50, 4));
}

TEST_CASE("p-power maps into the span of p'-elements")
{
  require_pass(check_formula_14(s4(), ZpkContext(2, 8), 100, 5, 3));
  require_pass(check_formula_14(s3(), ZpkContext(3, 5), 100, 6));
}

TEST_CASE("twisted span equals the norm kernel")
{
  require_pass(check_formula_2(cyclic(4), 0, ZpkContext(2, 6)));
  require_pass(check_formula_2(cyclic(4), 2, ZpkContext(2, 6)));
  auto g = s4();
  for (Elem c : {elem(g, {1, 0, 2, 3}), elem(g, {1, 2, 3, 0}), elem(g, {1, 2, 0, 3})})
    require_pass(check_formula_2(g, c, ZpkContext(2, 8)));
}

TEST_CASE("odd-p torsion in 1 + pRG")
{
  require_pass(check_lemma_odd(cyclic(3), ZpkContext(3, 5), 100000, 7));
  require_pass(check_lemma_odd(s3(), ZpkContext(3, 5), 2000, 8));
  CHECK_THROWS_AS(check_lemma_odd(s4(), ZpkContext(2, 8), 10, 1), Error);
}

TEST_CASE("consequences of c^2 = u^2")
{
  auto g = d8();
  ZpkContext ctx(2, 8);
  for (Elem c = 0; c < g->order(); ++c)
    require_pass(check_lemma_abc(g, c, RingElement::of(g, ctx, c), ctx));
  Rng rng(10);
  for (int t = 0; t < 10; ++t) {
    auto pair = make_hypothesis_pair(g, ctx, rng);
    CHECK(conjugate(RingElement::of(g, ctx, pair.c), pair.conjugator) == pair.u);
    require_pass(check_lemma_abc(g, pair.c, pair.u, ctx));
  }
  require_pass(check_lemma_abc_pairs(s4(), ctx, 20, 11));
  // c^2 != u^2 is outside the hypotheses
  Elem r = elem(g, {1, 2, 3, 0});
  Elem s = elem(g, {3, 2, 1, 0});
  CHECK_THROWS_AS(check_lemma_abc(g, s, RingElement::of(g, ctx, r), ctx), Error);
}

TEST_CASE("squares of involution combinations lie in 2RG")
{
  auto g = s4();
  ZpkContext ctx(2, 8);
  DistinguishedSubmodules d(g, ctx);
  Submodule two = d.multiple_of_full(2);
  auto invols = involutions(g);
  for (Elem s : invols) {
    RingElement x = RingElement::of(g, ctx, s) - RingElement::one(g, ctx);
    CHECK(two.contains((x * x).coeffs()));
    for (Elem t : invols)
      if (g->mul(s, t) == g->mul(t, s)) {
        RingElement y = RingElement::of(g, ctx, t) - RingElement::one(g, ctx);
        CHECK(two.contains((x * y + y * x).coeffs()));
      }
  }
  require_pass(check_lemma_l1(g, ctx, 300, 12));
  require_pass(check_lemma_l1(d8(), ctx, 100, 13));
}

TEST_CASE("centralizer locality")
{
  require_pass(check_centralizer_local(o_p(catalog_group("SL(2,3)"), 2), 2, 50, 14));
  require_pass(check_centralizer_local(o_p(s4(), 2), 2, 50, 15));
  require_pass(check_centralizer_local(o_p(s3(), 3), 3, 50, 16));
}

TEST_CASE("negative control: a false membership claim yields a verifiable payload")
{
  auto g = s4();
  ZpkContext ctx(2, 8);
  DistinguishedSubmodules d(g, ctx);
  SpannedModule comm = SpannedModule::from_submodule(d.commutator());
  // a group element is never a sum of commutators: augmentation 1
  Vector v = RingElement::one(g, ctx).coeffs();
  auto payload = non_membership_witness(comm, v, "1 in [RG,RG]");
  REQUIRE(payload.has_value());
  CHECK(reverify_counterexample(*payload));

  json tampered = *payload;
  tampered["vector"] = RingElement::zero(g, ctx).coeffs();
  CHECK_FALSE(reverify_counterexample(tampered));

  // a true claim produces no witness
  Elem a = elem(g, {1, 0, 2, 3}), b = elem(g, {1, 2, 3, 0});
  RingElement x = RingElement::of(g, ctx, a), y = RingElement::of(g, ctx, b);
  CHECK_FALSE(non_membership_witness(comm, (x * y - y * x).coeffs(), "true claim").has_value());

  // inequality payloads
  json ineq = {{"kind", "inequality"}, {"modulus", 8}, {"lhs", {1, 2}}, {"rhs", {1, 10}}};
  CHECK_FALSE(reverify_counterexample(ineq));
  ineq["rhs"] = {1, 3};
  CHECK(reverify_counterexample(ineq));
}

TEST_CASE("negative control: 2-divisibility fails without the factor 2")
{
  // (s-1)^2 = 2(1-s) lies in 2RG, but s-1 itself does not
  auto g = s4();
  ZpkContext ctx(2, 8);
  SpannedModule two = SpannedModule::from_submodule(DistinguishedSubmodules(g, ctx).multiple_of_full(2));
  Elem s = involutions(g)[0];
  RingElement x = RingElement::of(g, ctx, s) - RingElement::one(g, ctx);
  auto payload = non_membership_witness(two, x.coeffs(), "s - 1 in 2RG");
  REQUIRE(payload.has_value());
  CHECK(reverify_counterexample(*payload));
}

TEST_CASE("CheckResult JSON round trip")
{
  CheckResult r = check_formula_11(d8(), ZpkContext(2, 8));
  r.counterexample = json{{"kind", "inequality"}, {"modulus", 4}, {"lhs", {1}}, {"rhs", {2}}};
  r.inconclusive = 3;
  CheckResult back = check_result_from_json(to_json(r));
  CHECK(to_json(back) == to_json(r));
  CHECK(back.name == r.name);
  CHECK(back.inconclusive == 3);
}

TEST_CASE("checkers are deterministic in the seed")
{
  ZpkContext ctx(2, 8);
  CHECK(to_json(check_lemma_l1(s4(), ctx, 50, 99)) == to_json(check_lemma_l1(s4(), ctx, 50, 99)));
  CHECK(to_json(check_formula_12(s4(), ctx, 50, 99)) == to_json(check_formula_12(s4(), ctx, 50, 99)));
}
