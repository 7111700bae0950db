#include <algorithm>

#include "support.hpp"
#include "pblock/conjugacy.hpp"
#include "pblock/errors.hpp"
#include "pblock/group_ring.hpp"
#include "pblock/identities.hpp"

using namespace pblock;
using namespace testing_support;

namespace {

// Every u = a + b t in (Z/4)[C2] with u^2 = 1 and augmentation 1, by brute force.
std::vector<Vector> c2_square_roots_mod4(const GroupPtr &g)
{
  ZpkContext ctx(2, 2);
  std::vector<Vector> out;
  for (Residue a = 0; a < 4; ++a)
    for (Residue b = 0; b < 4; ++b) {
      RingElement u(g, ctx, Vector{a, b});
      if ((u * u).is_one() && u.augmentation() == 1)
        out.push_back(u.coeffs());
    }
  return out;
}

std::vector<Vector> sorted_coeffs(const std::vector<RingElement> &xs)
{
  std::vector<Vector> out;
  for (const auto &x : xs)
    out.push_back(x.coeffs());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("C2 enumeration mod 4 is exactly the hand-enumerable set")
{
  auto g = cyclic(2);
  ZpkContext low(2, 2);
  auto sols = enumerate_torsion_centralizer(o_p(g, 2), low);
  auto expected = c2_square_roots_mod4(g);
  std::sort(expected.begin(), expected.end());
  CHECK(sorted_coeffs(sols) == expected);
  CHECK(expected == std::vector<Vector>{{0, 1}, {1, 0}, {2, 3}, {3, 2}});

  std::vector<RingElement> genuine;
  for (const auto &u : sols)
    if (lift_check(u, 2) == LiftVerdict::Genuine)
      genuine.push_back(u);
  CHECK(sorted_coeffs(genuine) == std::vector<Vector>{{0, 1}, {1, 0}});
}

TEST_CASE("lift_check")
{
  auto g = s4();
  ZpkContext ctx(2, 8);
  for (Elem x = 0; x < g->order(); ++x)
    if (is_p_group(generated_subgroup(g, std::span<const Elem>(&x, 1)), 2))
      CHECK(lift_check(RingElement::of(g, ctx, x)) == LiftVerdict::Genuine);

  Elem s = involutions(g)[0];
  RingElement d = RingElement::of(g, ctx, s) - RingElement::one(g, ctx);
  RingElement spurious = RingElement::one(g, ctx) + d * 128;
  REQUIRE((spurious * spurious).is_one());
  CHECK(lift_check(spurious) == LiftVerdict::Spurious);

  Rng rng(3);
  RingElement v = random_unit(g, ctx, rng);
  auto spec = make_torsion_spec(TorsionKind::ConjugatedElement, g, ctx, s, v);
  CHECK(spec.realized == conjugate(RingElement::of(g, ctx, s), v));
  CHECK(lift_check(spec) == LiftVerdict::Genuine);
  CHECK(lift_check(spec.realized) == LiftVerdict::Genuine);
}

TEST_CASE("genuine torsion centralizing N lies in N (D8, A4)")
{
  for (auto g : {d8(), a4()}) {
    Subgroup n = o_p(g, 2);
    ZpkContext low(2, 2);
    auto sols = enumerate_torsion_centralizer(n, low);
    // corrections stay inside the centralizer of N
    auto sums = n_class_sums(n, low);
    for (const auto &u : sols)
      if (lift_check(u, 2, sums) == LiftVerdict::Genuine) {
        auto e = u.as_group_element();
        REQUIRE(e.has_value());
        CHECK(n.contains(*e));
      }
    // the oracle with symmetry reduction agrees with the plain enumeration
    std::vector<Elem> xs(g->order());
    for (Elem x = 0; x < g->order(); ++x)
      xs[x] = x;
    auto zn = center(g);
    std::vector<Elem> zs;
    for (Elem z : n.members())
      if (std::all_of(n.members().begin(), n.members().end(), [&](Elem h) { return g->mul(z, h) == g->mul(h, z); }))
        zs.push_back(z);
    auto res = torsion_oracle(sums, low, default_order_cap(*g, 2), 2, xs, zs);
    CHECK(res.solutions == sols.size());
    std::vector<RingElement> plain;
    for (const auto &u : sols)
      if (lift_check(u, 2, sums) == LiftVerdict::Genuine)
        plain.push_back(u);
    CHECK(sorted_coeffs(res.genuine) == sorted_coeffs(plain));
  }
}

TEST_CASE("Ward-Coleman factorization")
{
  auto g = s4();
  ZpkContext ctx(2, 8);
  Subgroup v4 = o_p(g, 2);
  Subgroup norm = normalizer(v4);
  for (Elem x : norm.members()) {
    auto f = ward_coleman_factor(RingElement::of(g, ctx, x), v4);
    CHECK((RingElement::of(g, ctx, f.group_part) * f.centralizing_part) == RingElement::of(g, ctx, x));
  }

  Rng rng(5);
  auto sums = n_class_sums(v4, ctx);
  Subgroup cgv = centralizer(g, v4.members());
  Elem t = elem(g, {1, 0, 2, 3});
  for (int i = 0; i < 20; ++i) {
    RingElement w0 = random_unit_in_span(sums, rng);
    RingElement u = RingElement::of(g, ctx, t) * w0;
    auto f = ward_coleman_factor(u, v4);
    CHECK(RingElement::of(g, ctx, f.group_part) * f.centralizing_part == u);
    for (Elem h : v4.members())
      CHECK(f.centralizing_part.commutes_with(RingElement::of(g, ctx, h)));
    // group part agrees with (1 2) modulo C_G(V4)
    CHECK(cgv.contains(g->mul(g->inv(t), f.group_part)));
  }

  // a unit that does not normalize V4
  Elem c3 = elem(g, {1, 2, 0, 3});
  RingElement bad = RingElement::one(g, ctx) + (RingElement::of(g, ctx, t) - RingElement::of(g, ctx, c3)) * 2;
  if (is_unit(bad))
    CHECK_THROWS_AS(ward_coleman_factor(bad, v4), Error);
}

TEST_CASE("coboundary conjugator")
{
  auto g = d8();
  ZpkContext ctx(2, 8);
  Elem c = elem(g, {3, 2, 1, 0});
  auto trivial = coboundary_conjugator(c, RingElement::of(g, ctx, c));
  CHECK(trivial.witness.is_one());
  CHECK(verify_certificate(trivial));

  Rng rng(17);
  for (int i = 0; i < 10; ++i) {
    auto pair = make_hypothesis_pair(g, ctx, c, rng);
    auto cert = coboundary_conjugator(c, pair.u);
    CHECK(verify_certificate(cert));
    CHECK(cert.precision >= ctx.k() - 1);
    // v = 1 + 2m
    RingElement m = cert.witness - RingElement::one(g, ctx);
    for (Residue x : m.coeffs())
      CHECK(x % 2 == 0);
  }
}

TEST_CASE("intertwiner conjugator")
{
  auto g = s4();
  ZpkContext ctx(2, 8);
  Rng rng(23);
  Elem s = involutions(g)[0];
  RingElement c = RingElement::of(g, ctx, s);
  auto same = intertwiner_conjugator(c, c, rng);
  CHECK(verify_certificate(same));

  for (int i = 0; i < 5; ++i) {
    RingElement v0 = random_unit(g, ctx, rng);
    RingElement u = conjugate(c, v0);
    auto cert = intertwiner_conjugator(c, u, rng);
    CHECK(verify_certificate(cert));
  }

  // orders 2 and 4: no unit intertwines them
  RingElement four = RingElement::of(g, ctx, elem(g, {1, 2, 3, 0}));
  try {
    intertwiner_conjugator(c, four, rng, 50);
    FAIL("expected NoUnitIntertwiner");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NoUnitIntertwiner);
  }
}

TEST_CASE("certificates: verification and JSON")
{
  auto g = d8();
  ZpkContext ctx(2, 8);
  Rng rng(2);
  Elem c = elem(g, {3, 2, 1, 0});
  RingElement v = random_unit(g, ctx, rng);
  ConjugacyCertificate cert{RingElement::of(g, ctx, c), conjugate(RingElement::of(g, ctx, c), v), v, 8};
  CHECK(verify_certificate(cert));
  auto back = certificate_from_json(to_json(cert), g);
  CHECK(verify_certificate(back));
  CHECK(to_json(back) == to_json(cert));

  ConjugacyCertificate wrong = cert;
  wrong.target = RingElement::of(g, ctx, elem(g, {1, 0, 3, 2}));
  CHECK_FALSE(verify_certificate(wrong));
  ConjugacyCertificate not_unit = cert;
  not_unit.witness = RingElement::zero(g, ctx);
  CHECK_FALSE(verify_certificate(not_unit));
}

TEST_CASE("torsion subgroups")
{
  auto g = s4();
  ZpkContext ctx(2, 8);
  Subgroup v4 = o_p(g, 2);
  for (auto style : {TorsionStyle::ConjugateSylowPart, TorsionStyle::ConjugateByCentralizingUnit})
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto t = build_torsion_subgroup(g, v4, style, seed, ctx);
      CHECK(is_p_group(t.base, 2));
      for (Elem h : v4.members())
        CHECK(t.base.contains(h));
      REQUIRE(t.generators.size() >= v4.generators().size());
      for (const auto &gen : t.generators) {
        CHECK(gen.realized == conjugate(RingElement::of(g, ctx, gen.base), gen.conjugator));
        CHECK(lift_check(gen) == LiftVerdict::Genuine);
      }
      if (style == TorsionStyle::ConjugateByCentralizingUnit)
        for (Elem h : v4.members())
          CHECK(t.conjugator.commutes_with(RingElement::of(g, ctx, h)));
    }
}

TEST_CASE("enumeration rank guard")
{
  auto g = catalog_group("Q8");
  ZpkContext low(2, 2);
  // Q8 has five classes: fine; the guard fires only above the limit
  CHECK_NOTHROW(enumerate_torsion_centralizer(o_p(g, 2), low));
  CHECK_THROWS_AS(enumerate_torsion_centralizer(o_p(s3(), 2), low), Error);
}
