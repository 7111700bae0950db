#include "doctest.h"
#include "fuzz.hpp"
#include "pblock/errors.hpp"
#include "pblock/zpk.hpp"

using namespace pblock;

namespace {

Submodule span_rows(const ZpkContext &ctx, std::size_t n, std::vector<Vector> rows)
{
  return Submodule::span(ctx, n, rows);
}

} // namespace

TEST_CASE("zero matrix gives an empty basis")
{
  ZpkContext ctx(2, 3);
  CHECK(Submodule::span(ctx, Matrix(3, 2)).is_zero());
  CHECK(Submodule(ctx, 2).contains(Vector{0, 0}));
}

TEST_CASE("Z/4, row [2]")
{
  ZpkContext ctx(2, 2);
  Submodule s = span_rows(ctx, 1, {{2}});
  REQUIRE(s.size() == 1);
  CHECK(s.basis().row_vector(0) == Vector{2});
  CHECK(s.contains(Vector{2}));
  CHECK_FALSE(s.contains(Vector{1}));
  CHECK(s.contains(Vector{0}));
}

TEST_CASE("Z/8, rows {[2,0],[0,4],[2,4]}")
{
  ZpkContext ctx(2, 3);
  std::vector<Vector> rows{{2, 0}, {0, 4}, {2, 4}};
  Submodule s = span_rows(ctx, 2, rows);
  CHECK(s.size() == 2);
  CHECK(s.log_cardinality() == 3);
  auto bitmap = fuzz::enumerate_span(ctx, 2, rows);
  std::size_t count = 0;
  for (bool b : bitmap)
    count += b;
  CHECK(count == 8);
}

TEST_CASE("Howell property: the classic 2x2 example over Z/4")
{
  // span{[2,1]} contains [0,2] = 2*[2,1], which the echelon row alone hides
  ZpkContext ctx(2, 2);
  Submodule s = span_rows(ctx, 2, {{2, 1}});
  CHECK(s.size() == 2);
  CHECK(s.contains(Vector{0, 2}));
  CHECK(s.pivot_column(1) == 1);
}

TEST_CASE("coordinates")
{
  ZpkContext ctx(3, 2);
  Submodule s = span_rows(ctx, 1, {{3}});
  auto c = s.coordinates(Vector{6});
  REQUIRE(c.has_value());
  CHECK(*c == Vector{2});
  CHECK_FALSE(s.coordinates(Vector{1}).has_value());

  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    ZpkContext cx(2, 4);
    auto rows = fuzz::random_rows(cx, 3, 3, rng);
    Submodule m = Submodule::span(cx, 3, rows);
    Vector v(3, 0);
    for (const auto &r : rows) {
      Residue k = rng.below(cx.modulus());
      for (std::size_t j = 0; j < 3; ++j)
        v[j] = cx.add(v[j], cx.mul(k, r[j]));
    }
    auto coords = m.coordinates(v);
    REQUIRE(coords.has_value());
    Vector back(3, 0);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < 3; ++j)
        back[j] = cx.add(back[j], cx.mul((*coords)[i], m.basis().at(i, j)));
    CHECK(back == v);
  }
}

TEST_CASE("solve")
{
  ZpkContext ctx(2, 2);
  Matrix a = Matrix::from_rows(1, {{2}});
  auto sol = try_solve(ctx, a, Vector{2});
  REQUIRE(sol.has_value());
  CHECK((sol->particular == Vector{1} || sol->particular == Vector{3}));
  CHECK(sol->kernel == span_rows(ctx, 1, {{2}}));
  CHECK_FALSE(try_solve(ctx, a, Vector{1}).has_value());
  try {
    solve(ctx, a, Vector{1});
    FAIL("expected NoSolution");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NoSolution);
  }

  auto zero = try_solve(ctx, a, Vector{0});
  REQUIRE(zero.has_value());
  CHECK(zero->particular == Vector{0});
  CHECK_THROWS_AS(try_solve(ctx, a, Vector{0, 0}), Error);
}

TEST_CASE("saturate")
{
  ZpkContext ctx(2, 3);
  Submodule full = Submodule::full(ctx, 2);
  CHECK(saturate(full) == full);
  CHECK(saturate(span_rows(ctx, 1, {{2}})) == span_rows(ctx, 1, {{1}}));
  CHECK(saturate(span_rows(ctx, 2, {{2, 2}})) == span_rows(ctx, 2, {{1, 1}}));
  Submodule pure = span_rows(ctx, 2, {{1, 3}});
  CHECK(saturate(pure) == pure);
  // the saturation contains S and is pure
  Submodule s = span_rows(ctx, 3, {{4, 2, 0}, {0, 0, 2}});
  Submodule sat = saturate(s);
  CHECK(sat.contains(s));
  for (unsigned e : elementary_exponents(sat))
    CHECK(e == 0);
}

TEST_CASE("intersection and sum")
{
  ZpkContext ctx(3, 2);
  Submodule a = span_rows(ctx, 2, {{1, 0}});
  Submodule b = span_rows(ctx, 2, {{1, 3}});
  Submodule i = intersect(a, b);
  CHECK(i == span_rows(ctx, 2, {{3, 0}}));
  CHECK((a + b) == span_rows(ctx, 2, {{1, 0}, {0, 3}}));
}

TEST_CASE("left kernels")
{
  ZpkContext ctx(2, 3);
  Matrix a = Matrix::from_rows(2, {{2, 0}, {0, 4}, {2, 4}});
  Submodule k = left_kernel(ctx, a);
  for (std::size_t r = 0; r < k.size(); ++r) {
    Vector y(2, 0);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        y[j] = ctx.add(y[j], ctx.mul(k.basis().at(r, i), a.at(i, j)));
    CHECK(y == Vector{0, 0});
  }
  // [1,1,-1] and [4,0,0] ([0,2,0] too) annihilate
  CHECK(k.contains(Vector{1, 1, 7}));
  CHECK(k.contains(Vector{4, 0, 0}));
  CHECK(k.contains(Vector{0, 2, 0}));
}

TEST_CASE("context mismatch is rejected")
{
  ZpkContext a(2, 3), b(3, 2);
  CHECK_THROWS_AS(Submodule::span(a, 1, {{1}}) + Submodule::span(b, 1, {{1}}), Error);
}

TEST_CASE("Howell canonicity fuzz")
{
  auto r = fuzz::howell_canonicity(3000, 11);
  INFO(r.first_failure);
  CHECK(r.failures == 0);
}

TEST_CASE("solve/membership fuzz")
{
  auto r = fuzz::solve_membership(3000, 12);
  INFO(r.first_failure);
  CHECK(r.failures == 0);
}
