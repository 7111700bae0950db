#include <algorithm>
#include <set>

#include "support.hpp"
#include "pblock/errors.hpp"

using namespace pblock;
using namespace testing_support;
using nlohmann::json;

namespace {

// Brute force: a normal p-subgroup test over every subset closed under the
// generated-subgroup operation, seeded by every pair of elements.
std::vector<Subgroup> all_subgroups(const GroupPtr &g)
{
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> out;
  for (Elem a = 0; a < g->order(); ++a)
    for (Elem b = a; b < g->order(); ++b) {
      std::vector<Elem> gens{a, b};
      Subgroup h = generated_subgroup(g, gens);
      if (seen.insert(h.members()).second)
        out.push_back(h);
    }
  // add joins of pairs once more so that three-generated subgroups appear
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      auto gens = out[i].generators();
      auto more = out[j].generators();
      gens.insert(gens.end(), more.begin(), more.end());
      Subgroup h = generated_subgroup(g, gens);
      if (seen.insert(h.members()).second)
        out.push_back(h);
    }
  return out;
}

std::size_t largest_normal_p_order(const GroupPtr &g, unsigned p)
{
  std::size_t best = 1;
  for (const auto &h : all_subgroups(g))
    if (is_p_group(h, p) && is_normal(h))
      best = std::max(best, h.order());
  return best;
}

} // namespace

TEST_CASE("load_group: trivial, permutations, Cayley table")
{
  auto t = load_group(json{{"name", "1"}, {"kind", "perm"}, {"degree", 1}, {"generators", json::array()}});
  CHECK(t->order() == 1);

  auto g = load_group(json{{"name", "S3"}, {"kind", "perm"}, {"degree", 3}, {"generators", {{1, 0, 2}, {1, 2, 0}}}});
  CHECK(g->order() == 6);

  json table = {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
  auto c4 = load_group(json{{"name", "C4"}, {"kind", "table"}, {"cayley", table}});
  std::multiset<std::size_t> orders;
  for (Elem x = 0; x < 4; ++x)
    orders.insert(c4->element_order(x));
  CHECK(orders == std::multiset<std::size_t>{1, 2, 4, 4});
}

TEST_CASE("load_group: errors")
{
  json bad = {{0, 1}, {0, 1}};
  try {
    load_group(json{{"name", "x"}, {"kind", "table"}, {"cayley", bad}});
    FAIL("expected NonGroup");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NonGroup);
  }
  try {
    FiniteGroup::from_permutations("S6", 6, {{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}});
    FAIL("expected ClosureOverflow");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::ClosureOverflow);
  }
}

TEST_CASE("table and permutation product conventions agree")
{
  auto g = s4();
  for (Elem a = 0; a < g->order(); ++a)
    for (Elem b = 0; b < g->order(); ++b) {
      const auto &pa = g->permutation(a), &pb = g->permutation(b);
      Permutation ab(4);
      for (std::size_t i = 0; i < 4; ++i)
        ab[i] = pb[pa[i]];
      CHECK(g->mul(a, b) == elem(g, ab));
    }
}

TEST_CASE("o_p against brute-force subgroup enumeration")
{
  CHECK(o_p(cyclic(3), 3).order() == 3);
  CHECK(o_p(s4(), 2).order() == 4);
  CHECK(o_p(s4(), 3).order() == 1);
  for (auto g : {s3(), s4(), a4(), d8(), catalog_group("SL(2,3)")})
    for (unsigned p : {2u, 3u})
      CHECK(o_p(g, p).order() == largest_normal_p_order(g, p));
}

TEST_CASE("centralizer and normalizer")
{
  auto g = s4();
  Elem one = 0;
  CHECK(centralizer(g, std::span<const Elem>(&one, 1)).order() == 24);
  Subgroup v4 = o_p(g, 2);
  CHECK(centralizer(g, v4.members()) == v4);

  auto s = s3();
  Elem r = elem(s, {1, 2, 0});
  Subgroup c3 = generated_subgroup(s, std::span<const Elem>(&r, 1));
  CHECK(normalizer(c3).order() == 6);
  CHECK(centralizer(s, c3.members()) == c3);
}

TEST_CASE("is_admissible")
{
  auto c2 = cyclic(2);
  auto a = is_admissible(c2, 2);
  CHECK(a.admissible);
  CHECK(a.normal_subgroup.order() == 2);

  auto b = is_admissible(s4(), 2);
  CHECK(b.admissible);
  CHECK(b.normal_subgroup.order() == 4);

  auto c = is_admissible(s3(), 2);
  CHECK_FALSE(c.admissible);
  CHECK(c.normal_subgroup.order() == 1);
  REQUIRE(c.witness.has_value());
  CHECK(*c.witness != 0);
}

TEST_CASE("sylow_p")
{
  CHECK(sylow_p(cyclic(6), 2).order() == 2);
  CHECK(sylow_p(d8(), 2).order() == 8);
  Subgroup p = sylow_p(s4(), 2);
  CHECK(p.order() == 8);
  CHECK(is_p_group(p, 2));
  // dihedral: non-abelian with five involutions
  std::size_t inv = 0;
  for (Elem x : p.members())
    inv += s4()->element_order(x) == 2;
  CHECK(inv == 5);

  Subgroup v4 = o_p(s4(), 2);
  Subgroup q = sylow_containing(v4, 2);
  CHECK(q.order() == 8);
  for (Elem x : v4.members())
    CHECK(q.contains(x));
}

TEST_CASE("n_class_orbit")
{
  auto s = s3();
  Elem r = elem(s, {1, 2, 0});
  Subgroup c3 = generated_subgroup(s, std::span<const Elem>(&r, 1));
  CHECK(n_class_orbit(c3, 0) == std::vector<Elem>{0});
  auto orbit = n_class_orbit(c3, elem(s, {1, 0, 2}));
  CHECK(orbit.size() == 3);
  for (Elem x : orbit)
    CHECK(s->element_order(x) == 2);

  auto g = s4();
  CHECK(n_class_orbit(o_p(g, 2), elem(g, {1, 0, 2, 3})).size() == 2);

  Elem t = elem(g, {1, 0, 2, 3});
  Subgroup not_normal = generated_subgroup(g, std::span<const Elem>(&t, 1));
  CHECK_THROWS_AS(n_class_orbit(not_normal, 0), Error);
}

TEST_CASE("special_sets")
{
  auto a = special_sets(cyclic(3), 2);
  CHECK(a.involutions.empty());
  CHECK(a.p_prime_elements.size() == 3);
  CHECK(special_sets(s3(), 2).involutions.size() == 3);
  CHECK(special_sets(cyclic(4), 2).involutions.size() == 1);
  // S4, p = 2: 2'-elements are the identity and the eight 3-cycles
  CHECK(special_sets(s4(), 2).p_prime_elements.size() == 9);
}

TEST_CASE("quotient_by")
{
  auto g = s4();
  QuotientMap q = quotient_by(o_p(g, 2));
  CHECK(q.quotient->order() == 6);
  for (Elem a = 0; a < g->order(); ++a)
    for (Elem b = 0; b < g->order(); ++b)
      CHECK(q.projection[g->mul(a, b)] == q.quotient->mul(q.projection[a], q.projection[b]));

  QuotientMap id = quotient_by(trivial_subgroup(g));
  CHECK(id.quotient->order() == 24);
  std::set<Elem> image(id.projection.begin(), id.projection.end());
  CHECK(image.size() == 24);

  auto c4 = cyclic(4);
  CHECK(quotient_by(o_p(c4, 2)).quotient->order() == 1);
  Elem sq = 2;
  REQUIRE(c4->element_order(sq) == 2);
  CHECK(quotient_by(generated_subgroup(c4, std::span<const Elem>(&sq, 1))).quotient->order() == 2);

  Elem t = elem(g, {1, 0, 2, 3});
  CHECK_THROWS_AS(quotient_by(generated_subgroup(g, std::span<const Elem>(&t, 1))), Error);
}

TEST_CASE("center and conjugate subgroups")
{
  CHECK(center(d8()).order() == 2);
  CHECK(center(catalog_group("SL(2,3)")).order() == 2);
  CHECK(center(s4()).order() == 1);
  auto g = s4();
  Subgroup p = sylow_p(g, 2);
  for (Elem x = 0; x < g->order(); ++x)
    CHECK(conjugate_subgroup(p, x).order() == 8);
}
