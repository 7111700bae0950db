#include "support.hpp"
#include "pblock/arith.hpp"
#include "pblock/errors.hpp"
#include "pblock/group_ring.hpp"

using namespace pblock;
using namespace testing_support;

namespace {

// Rank of a square matrix over F_p by plain elimination.
bool invertible_mod_p(Matrix m, unsigned p)
{
  std::size_t n = m.rows();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m.at(r, c) %= p;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m.at(piv, col) == 0)
      ++piv;
    if (piv == n)
      return false;
    for (std::size_t c = 0; c < n; ++c)
      std::swap(m.at(piv, c), m.at(col, c));
    std::uint64_t inv = 1;
    while (inv * m.at(col, col) % p != 1)
      ++inv;
    for (std::size_t r = col + 1; r < n; ++r) {
      std::uint64_t f = m.at(r, col) * inv % p;
      for (std::size_t c = 0; c < n; ++c)
        m.at(r, c) = (m.at(r, c) + p * p - f * m.at(col, c) % p) % p;
    }
  }
  return true;
}

} // namespace

TEST_CASE("basic arithmetic")
{
  auto g = s3();
  ZpkContext ctx(2, 6);
  for (Elem x = 0; x < g->order(); ++x)
    CHECK((RingElement::of(g, ctx, x) * RingElement::of(g, ctx, g->inv(x))).is_one());

  for (Elem s : involutions(g)) {
    RingElement d = RingElement::of(g, ctx, s) - RingElement::one(g, ctx);
    CHECK(d * d == (RingElement::one(g, ctx) - RingElement::of(g, ctx, s)) * 2);
  }
}

TEST_CASE("augmentation")
{
  auto g = s4();
  ZpkContext ctx(2, 8);
  Rng rng(3);
  for (Elem x = 0; x < g->order(); ++x)
    CHECK(RingElement::of(g, ctx, x).augmentation() == 1);
  for (int t = 0; t < 20; ++t) {
    RingElement a = random_element(g, ctx, rng);
    Elem h = static_cast<Elem>(rng.below(g->order()));
    CHECK(((RingElement::of(g, ctx, h) - RingElement::one(g, ctx)) * a).augmentation() == 0);
    RingElement b = random_element(g, ctx, rng);
    CHECK((a * b).augmentation() == ctx.mul(a.augmentation(), b.augmentation()));
  }
}

TEST_CASE("ring axioms on random triples")
{
  auto g = catalog_group("SL(2,3)");
  ZpkContext ctx(2, 8);
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    RingElement a = random_element(g, ctx, rng), b = random_element(g, ctx, rng), c = random_element(g, ctx, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == RingElement::zero(g, ctx));
  }
  // embedding is a homomorphism
  for (Elem x = 0; x < g->order(); ++x)
    for (Elem y = 0; y < g->order(); y += 3)
      CHECK(RingElement::of(g, ctx, x) * RingElement::of(g, ctx, y) == RingElement::of(g, ctx, g->mul(x, y)));
}

TEST_CASE("inversion")
{
  auto c2 = cyclic(2);
  ZpkContext ctx(2, 3);
  RingElement x(c2, ctx, Vector{7, 2});
  auto inv = try_invert(x);
  REQUIRE(inv.has_value());
  CHECK(*inv == RingElement(c2, ctx, Vector{3, 6}));

  auto g = s4();
  for (Elem e = 0; e < g->order(); ++e)
    CHECK(invert(RingElement::of(g, ctx, e)) == RingElement::of(g, ctx, g->inv(e)));

  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    RingElement u = RingElement::one(g, ctx) + random_element(g, ctx, rng) * 2;
    CHECK((u * invert(u)).is_one());
  }
  try {
    invert(RingElement::of(g, ctx, 1) - RingElement::one(g, ctx));
    FAIL("expected NotUnit");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NotUnit);
  }
}

TEST_CASE("try_invert agrees with the regular representation mod p")
{
  Rng rng(21);
  for (auto [g, p, k] : {std::tuple{s3(), 3u, 3u}, std::tuple{d8(), 2u, 4u}, std::tuple{a4(), 3u, 2u}}) {
    ZpkContext ctx(p, k);
    int units = 0;
    for (int t = 0; t < 60; ++t) {
      Vector coeffs(g->order(), 0);
      for (auto &c : coeffs)
        c = rng.below(3) == 0 ? rng.below(ctx.modulus()) : 0;
      coeffs[0] = rng.below(ctx.modulus());
      RingElement x(g, ctx, coeffs);
      bool expect = invertible_mod_p(right_multiplication_matrix(x), p);
      CHECK(try_invert(x).has_value() == expect);
      CHECK(is_unit(x) == expect);
      units += expect;
    }
    CHECK(units > 0);
  }
}

TEST_CASE("unit_order")
{
  auto g = s4();
  ZpkContext ctx(2, 8);
  Rng rng(4);
  for (Elem x = 0; x < g->order(); ++x) {
    if (!is_p_power(g->element_order(x), 2))
      continue;
    auto r = unit_order(RingElement::of(g, ctx, x));
    REQUIRE(r.resolved());
    CHECK(ipow(2, *r.exponent) == g->element_order(x));
    RingElement v = random_unit(g, ctx, rng);
    auto rc = unit_order(conjugate(RingElement::of(g, ctx, x), v));
    REQUIRE(rc.resolved());
    CHECK(*rc.exponent == *r.exponent);
  }
  // truncation artifact: order two modulo 2^k
  Elem s = involutions(g)[0];
  RingElement u = RingElement::one(g, ctx) + (RingElement::of(g, ctx, s) - RingElement::one(g, ctx)) * 128;
  auto r = unit_order(u);
  REQUIRE(r.resolved());
  CHECK(*r.exponent == 1);
  // a 3-element has no 2-power order
  CHECK_FALSE(unit_order(RingElement::of(g, ctx, elem(g, {1, 2, 0, 3}))).resolved());
}

TEST_CASE("conjugate")
{
  auto g = d8();
  ZpkContext ctx(2, 8);
  Rng rng(6);
  RingElement x = random_element(g, ctx, rng);
  CHECK(conjugate(x, RingElement::one(g, ctx)) == x);
  Elem z = center(g).members()[1];
  RingElement central = RingElement::of(g, ctx, z) * 3 + RingElement::one(g, ctx);
  CHECK(conjugate(central, random_unit(g, ctx, rng)) == central);
  RingElement v = random_unit(g, ctx, rng);
  CHECK(v * conjugate(x, v) == x * v);
}

TEST_CASE("distinguished submodules: commutator against brute force")
{
  auto g = s3();
  ZpkContext ctx(3, 2);
  DistinguishedSubmodules d(g, ctx);
  std::vector<Vector> rows;
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) {
      RingElement x = RingElement::of(g, ctx, a), y = RingElement::of(g, ctx, b);
      rows.push_back((x * y - y * x).coeffs());
    }
  CHECK(rows.size() == 36);
  CHECK(d.commutator() == Submodule::span(ctx, 6, rows));

  DistinguishedSubmodules ab(cyclic(4), ZpkContext(2, 5));
  CHECK(ab.commutator().is_zero());
  CHECK(d.twisted(0).is_zero());
}

TEST_CASE("twisted submodule against brute force")
{
  auto g = s4();
  ZpkContext ctx(2, 4);
  DistinguishedSubmodules d(g, ctx);
  Elem c = elem(g, {1, 2, 3, 0});
  std::vector<Vector> rows;
  for (Elem x = 0; x < g->order(); ++x)
    rows.push_back((RingElement::of(g, ctx, x) - RingElement::of(g, ctx, g->conj(x, c))).coeffs());
  CHECK(d.twisted(c) == Submodule::span(ctx, 24, rows));
}

TEST_CASE("aug_ideal equals the collapse kernel")
{
  for (auto [g, p] : {std::pair{s4(), 2u}, std::pair{catalog_group("SL(2,3)"), 2u}, std::pair{s3(), 3u}}) {
    ZpkContext ctx(p, 4);
    DistinguishedSubmodules d(g, ctx);
    Subgroup n = o_p(g, p);
    CHECK(d.aug_ideal(n) == collapse_kernel(n, ctx));
    // brute force: (h - 1) g for all h in N, g in G
    std::vector<Vector> rows;
    for (Elem h : n.members())
      for (Elem x = 0; x < g->order(); ++x)
        rows.push_back(((RingElement::of(g, ctx, h) - RingElement::one(g, ctx)) * RingElement::of(g, ctx, x)).coeffs());
    CHECK(d.aug_ideal(n) == Submodule::span(ctx, g->order(), rows));
  }
}

TEST_CASE("n_class_sum and the centralizer of N")
{
  auto g = s3();
  ZpkContext ctx(3, 5);
  Subgroup n = o_p(g, 3);
  Elem t = elem(g, {1, 0, 2});
  RingElement sum = n_class_sum(n, t, ctx);
  std::vector<Elem> transpositions = involutions(g);
  CHECK(sum == RingElement::sum_of(g, ctx, transpositions));
  Elem r = elem(g, {1, 2, 0});
  CHECK(n_class_sum(n, r, ctx) == RingElement::of(g, ctx, r));

  for (auto [grp, p] : {std::pair{s4(), 2u}, std::pair{a4(), 2u}, std::pair{s3(), 3u}}) {
    ZpkContext cx(p, 3);
    Subgroup nn = o_p(grp, p);
    std::vector<Vector> sums;
    for (const auto &s : n_class_sums(nn, cx))
      sums.push_back(s.coeffs());
    Submodule c = centralizer_in_ring(nn, cx);
    CHECK(c == Submodule::span(cx, grp->order(), sums));
    // every member commutes with N
    for (const auto &s : n_class_sums(nn, cx))
      for (Elem h : nn.members())
        CHECK(s.commutes_with(RingElement::of(grp, cx, h)));
  }
}

TEST_CASE("projection is a ring homomorphism")
{
  auto g = s4();
  ZpkContext ctx(2, 6);
  QuotientMap q = quotient_by(o_p(g, 2));
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    RingElement a = random_element(g, ctx, rng), b = random_element(g, ctx, rng);
    CHECK(project(a * b, q) == project(a, q) * project(b, q));
  }
}

TEST_CASE("precision changes and JSON")
{
  auto g = d8();
  ZpkContext ctx(2, 8);
  Rng rng(1);
  RingElement x = random_element(g, ctx, rng);
  CHECK(x.with_precision(4).context().k() == 4);
  CHECK(ring_element_from_json(to_json(x), g) == x);
  RingElement two_x = x * 2;
  CHECK(two_x.divide_by_p().with_precision(7) == x.with_precision(7));
}
