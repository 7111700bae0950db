#include "pblock/conjugacy.hpp"

#include <algorithm>

#include "pblock/arith.hpp"
#include "pblock/errors.hpp"
#include "pblock/parallel.hpp"

namespace pblock {

using nlohmann::json;

TorsionUnitSpec make_torsion_spec(TorsionKind kind, const GroupPtr &g, const ZpkContext &ctx, Elem base,
                                  const RingElement &conjugator)
{
  RingElement realized = conjugate(RingElement::of(g, ctx, base), conjugator);
  return {kind, base, conjugator, std::move(realized)};
}

bool verify_certificate(const ConjugacyCertificate &c)
{
  unsigned k = c.precision;
  if (k == 0 || k > c.witness.context().k())
    return false;
  RingElement s = c.source.with_precision(k);
  RingElement t = c.target.with_precision(k);
  RingElement w = c.witness.with_precision(k);
  return is_unit(w) && s * w == w * t;
}

json to_json(const ConjugacyCertificate &c)
{
  return json{{"source", to_json(c.source)},
              {"target", to_json(c.target)},
              {"witness", to_json(c.witness)},
              {"precision", c.precision}};
}

ConjugacyCertificate certificate_from_json(const json &j, const GroupPtr &g)
{
  return {ring_element_from_json(j.at("source"), g), ring_element_from_json(j.at("target"), g),
          ring_element_from_json(j.at("witness"), g), j.at("precision").get<unsigned>()};
}

WardColemanFactorization ward_coleman_factor(const RingElement &u, const Subgroup &h)
{
  const auto &g = u.group();
  const auto &ctx = u.context();
  if (u.augmentation() != 1 % ctx.modulus())
    throw Error(ErrorKind::HypothesisViolated, "Ward-Coleman factorization needs augmentation one");
  RingElement ui = invert(u);
  auto gens = h.generators();
  std::vector<Elem> images;
  for (Elem x : gens) {
    auto image = (ui * RingElement::of(g, ctx, x) * u).as_group_element();
    if (!image || !h.contains(*image))
      throw Error(ErrorKind::NotNormalizing, "u^-1 " + g->label(x) + " u is not an element of H");
    images.push_back(*image);
  }
  Subgroup norm = normalizer(h);
  for (Elem cand : norm.members()) {
    bool same = true;
    for (std::size_t i = 0; i < gens.size() && same; ++i)
      same = g->conj(gens[i], cand) == images[i];
    if (!same)
      continue;
    RingElement w = RingElement::of(g, ctx, g->inv(cand)) * u;
    for (Elem x : gens)
      if (!w.commutes_with(RingElement::of(g, ctx, x)))
        throw Error(ErrorKind::FactorizationFailed, "centralizing part does not commute with H");
    if (w.augmentation() != 1 % ctx.modulus())
      throw Error(ErrorKind::FactorizationFailed, "centralizing part has augmentation != 1");
    return {u, cand, std::move(w)};
  }
  throw Error(ErrorKind::FactorizationFailed, "no element of N_G(H) induces the automorphism of u");
}

ConjugacyCertificate coboundary_conjugator(Elem c, const RingElement &u)
{
  const auto &g = u.group();
  const auto &ctx = u.context();
  if (ctx.p() != 2 || ctx.k() < 2)
    throw Error(ErrorKind::HypothesisViolated, "coboundary conjugator needs p = 2 and k >= 2");
  if (!is_p_power(g->element_order(c), 2))
    throw Error(ErrorKind::HypothesisViolated, "c is not a 2-element");
  if (!is_unit(u) || !unit_order(u).resolved())
    throw Error(ErrorKind::HypothesisViolated, "u is not a unit of 2-power order");
  RingElement ce = RingElement::of(g, ctx, c);
  if (!(ce * ce == u * u))
    throw Error(ErrorKind::HypothesisViolated, "c^2 != u^2");
  Elem cinv = g->inv(c);
  RingElement f = (RingElement::of(g, ctx, cinv) * u - RingElement::one(g, ctx)).divide_by_p();
  const ZpkContext &low = f.context();

  DistinguishedSubmodules ds(g, low);
  auto invols = special_sets(g, 2).involutions;
  if (!(ds.multiple_of_full(2) + ds.span(invols) + ds.scalars()).contains(f.coeffs()))
    throw Error(ErrorKind::HypothesisViolated, "f is not in 2RG + R[T2] + R");

  // row h: image of h under m -> m - c^-1 m u
  std::size_t n = g->order();
  RingElement ul = u.with_precision(low.k());
  Matrix m(n, n);
  for (Elem h = 0; h < n; ++h) {
    RingElement img = RingElement::of(g, low, h) - RingElement::of(g, low, g->mul(cinv, h)) * ul;
    for (Elem a = 0; a < n; ++a)
      m.at(h, a) = img.coeff(a);
  }
  auto sol = try_solve(low, m.transposed(), f.coeffs());
  if (!sol)
    throw Error(ErrorKind::NoCoboundary, "m - c^-1 m u = f has no solution");

  RingElement v = RingElement::one(g, ctx) + RingElement(g, ctx, sol->particular) * 2;
  if (!is_unit(v))
    throw Error(ErrorKind::NotUnit, "1 + 2m is not a unit");
  v = v * ctx.inverse(v.augmentation());
  for (unsigned k : {ctx.k(), ctx.k() - 1}) {
    ConjugacyCertificate cert{ce, u, v, k};
    if (verify_certificate(cert))
      return cert;
  }
  throw Error(ErrorKind::NoCoboundary, "coboundary witness fails to conjugate c to u");
}

ConjugacyCertificate joint_intertwiner(std::span<const RingElement> sources, std::span<const RingElement> targets,
                                       Rng &rng, unsigned random_budget)
{
  if (sources.empty() || sources.size() != targets.size())
    throw Error(ErrorKind::DimensionMismatch, "intertwiner needs matching nonempty lists");
  const auto &g = sources.front().group();
  const auto &ctx = sources.front().context();
  std::size_t n = g->order();

  // X -> (X u_i - c_i X)_i
  Matrix m(n, n * sources.size());
  for (std::size_t i = 0; i < sources.size(); ++i) {
    Matrix r = right_multiplication_matrix(targets[i]);
    Matrix l = left_multiplication_matrix(sources[i]);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        m.at(a, i * n + b) = ctx.sub(r.at(a, b), l.at(a, b));
  }
  Submodule kernel = left_kernel(ctx, m);

  auto attempt = [&](RingElement x) -> std::optional<ConjugacyCertificate> {
    Residue e = x.augmentation();
    if (e % ctx.p() == 0 || !is_unit(x))
      return std::nullopt;
    x = x * ctx.inverse(e);
    for (std::size_t i = 0; i < sources.size(); ++i)
      if (!(sources[i] * x == x * targets[i]))
        return std::nullopt;
    return ConjugacyCertificate{sources.front(), targets.front(), std::move(x), ctx.k()};
  };

  std::vector<RingElement> basis;
  for (std::size_t i = 0; i < kernel.size(); ++i)
    basis.emplace_back(g, ctx, kernel.basis().row_vector(i));
  for (const auto &b : basis)
    if (auto cert = attempt(b))
      return *cert;
  if (!basis.empty())
    for (unsigned t = 0; t < random_budget; ++t)
      if (auto cert = attempt(random_combination(basis, ctx.p(), rng)))
        return *cert;
  throw Error(ErrorKind::NoUnitIntertwiner, "no unit intertwiner within the search budget");
}

ConjugacyCertificate intertwiner_conjugator(const RingElement &c, const RingElement &u, Rng &rng,
                                            unsigned random_budget)
{
  return joint_intertwiner(std::span(&c, 1), std::span(&u, 1), rng, random_budget);
}

TorsionSubgroup build_torsion_subgroup(const GroupPtr &g, const Subgroup &n, TorsionStyle style,
                                       std::uint64_t seed, const ZpkContext &ctx)
{
  unsigned p = ctx.p();
  if (!is_admissible(g, p).admissible)
    throw Error(ErrorKind::HypothesisViolated, "(G, p) is not admissible");
  if (!is_p_group(n, p) || !is_normal(n))
    throw Error(ErrorKind::HypothesisViolated, "N is not a normal p-subgroup");

  Rng rng(seed);
  Subgroup sylow = conjugate_subgroup(sylow_containing(n, p), static_cast<Elem>(rng.below(g->order())));
  std::vector<Elem> gens = n.members();
  std::size_t extra = rng.below(4);
  for (std::size_t i = 0; i < extra; ++i)
    gens.push_back(sylow.members()[rng.below(sylow.order())]);
  Subgroup h = generated_subgroup(g, gens);

  RingElement v = style == TorsionStyle::ConjugateByCentralizingUnit
                    ? random_unit_in_span(n_class_sums(n, ctx), rng)
                    : random_unit(g, ctx, rng);

  std::vector<TorsionUnitSpec> specs;
  for (Elem x : n.generators())
    specs.push_back(make_torsion_spec(TorsionKind::ConjugatedSubgroupGenerator, g, ctx, x, v));
  for (Elem x : h.generators())
    if (!n.contains(x))
      specs.push_back(make_torsion_spec(TorsionKind::ConjugatedSubgroupGenerator, g, ctx, x, v));
  return {std::move(h), std::move(v), std::move(specs)};
}

namespace {

bool has_order(const RingElement &u, std::uint64_t order)
{
  if (!u.pow(order).is_one())
    return false;
  for (std::uint64_t q = 2; q <= order; ++q)
    if (order % q == 0 && is_prime(q) && u.pow(order / q).is_one())
      return false;
  return true;
}

// Images d -> sum_{i < p^a} u^i d u^(p^a - 1 - i), built by d_{pQ} = sum_i u^(Qi) d_Q u^(Q(p-1-i)).
std::vector<RingElement> derivative_images(const RingElement &u, unsigned a, std::span<const RingElement> dirs)
{
  unsigned p = u.context().p();
  std::vector<RingElement> out;
  for (const auto &d : dirs)
    out.push_back(d.with_precision(u.context().k()));
  RingElement uq = u;
  for (unsigned step = 0; step < a; ++step) {
    std::vector<RingElement> powers{RingElement::one(u.group(), u.context())};
    for (unsigned i = 1; i < p; ++i)
      powers.push_back(powers.back() * uq);
    for (auto &d : out) {
      RingElement acc = RingElement::zero(u.group(), u.context());
      for (unsigned i = 0; i < p; ++i)
        acc += powers[i] * d * powers[p - 1 - i];
      d = std::move(acc);
    }
    uq = powers.back() * uq;
  }
  return out;
}

// Residue r with u^(p^a) = 1 + p^j r, read modulo p^delta; u has precision j + delta.
std::optional<Vector> excess(const RingElement &u, unsigned a, unsigned j, unsigned delta)
{
  RingElement w = u.pow_p_power(a) - RingElement::one(u.group(), u.context());
  Residue pj = ipow(u.context().p(), j);
  Residue pd = ipow(u.context().p(), delta);
  Vector r(w.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (w.coeffs()[i] % pj != 0)
      return std::nullopt;
    r[i] = (w.coeffs()[i] / pj) % pd;
  }
  return r;
}

// Solutions Y mod p^delta of D(Y) = -r, D from the derivative images.
std::optional<Solution> linearized_solve(const std::vector<RingElement> &images, const Vector &r,
                                         const ZpkContext &small)
{
  std::size_t n = r.size();
  Matrix a(n, images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t row = 0; row < n; ++row)
      a.at(row, i) = images[i].coeff(row) % small.modulus();
  Vector b(n);
  for (std::size_t row = 0; row < n; ++row)
    b[row] = small.neg(r[row] % small.modulus());
  return try_solve(small, a, b);
}

std::vector<RingElement> all_directions(const GroupPtr &g, const ZpkContext &ctx)
{
  std::vector<RingElement> dirs;
  for (Elem a = 1; a < g->order(); ++a)
    dirs.push_back(RingElement::of(g, ctx, a) - RingElement::one(g, ctx));
  return dirs;
}

RingElement combine(const RingElement &start, std::span<const RingElement> dirs, std::span<const Residue> coeffs,
                    Residue scale_by)
{
  RingElement out = start;
  for (std::size_t i = 0; i < dirs.size(); ++i)
    if (coeffs[i] != 0)
      out += dirs[i].with_precision(start.context().k()) * ((coeffs[i] * scale_by) % start.context().modulus());
  return out;
}

// Every element particular + span(kernel) over F_p.
std::vector<Vector> enumerate_affine(const Solution &s, unsigned p)
{
  std::vector<Vector> out{s.particular};
  const auto &basis = s.kernel.basis();
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t existing = out.size();
    for (unsigned c = 1; c < p; ++c)
      for (std::size_t e = 0; e < existing; ++e) {
        Vector v = out[e];
        for (std::size_t j = 0; j < v.size(); ++j)
          v[j] = (v[j] + c * basis.at(i, j)) % p;
        out.push_back(std::move(v));
      }
  }
  return out;
}

} // namespace

LiftVerdict lift_check(const TorsionUnitSpec &spec, unsigned delta)
{
  const auto &g = spec.realized.group();
  ZpkContext hi = spec.realized.context().with_precision(spec.realized.context().k() + delta);
  RingElement v = spec.conjugator.with_precision(hi.k());
  auto vi = try_invert(v);
  if (!vi)
    return LiftVerdict::Spurious;
  RingElement realized = *vi * RingElement::of(g, hi, spec.base) * v;
  if (!(realized.with_precision(spec.realized.context().k()) == spec.realized))
    return LiftVerdict::Spurious;
  return has_order(realized, g->element_order(spec.base)) ? LiftVerdict::Genuine : LiftVerdict::Spurious;
}

LiftVerdict lift_check(const RingElement &u, unsigned delta, std::span<const RingElement> directions)
{
  const auto &g = u.group();
  const auto &ctx = u.context();
  if (delta == 0)
    return LiftVerdict::Genuine;
  if (delta > ctx.k())
    throw Error(ErrorKind::InputError, "lift_check needs delta <= k");
  if (!is_unit(u))
    return LiftVerdict::Spurious;
  auto order = unit_order(u);
  if (!order.resolved())
    return LiftVerdict::Spurious;

  std::vector<RingElement> owned;
  if (directions.empty()) {
    owned = all_directions(g, ctx);
    directions = owned;
  }
  ZpkContext hi = ctx.with_precision(ctx.k() + delta);
  ZpkContext small = ctx.with_precision(delta);
  RingElement big = u.with_precision(hi.k());
  auto r = excess(big, *order.exponent, ctx.k(), delta);
  if (!r)
    return LiftVerdict::Spurious;
  auto images = derivative_images(u.with_precision(delta), *order.exponent, directions);
  return linearized_solve(images, *r, small) ? LiftVerdict::Genuine : LiftVerdict::Spurious;
}

std::vector<RingElement> augmentation_free_basis(const std::vector<RingElement> &class_sums)
{
  std::vector<RingElement> out;
  for (const auto &s : class_sums) {
    if (s.is_one())
      continue;
    const auto &ctx = s.context();
    out.push_back(s - RingElement::one(s.group(), ctx) * (s.augmentation() % ctx.modulus()));
  }
  return out;
}

namespace {

struct SpanSetup {
  GroupPtr g;
  std::vector<RingElement> dirs;
  std::uint64_t level_one_count;
};

SpanSetup setup_span(const std::vector<RingElement> &class_sums, const ZpkContext &low)
{
  if (class_sums.size() > max_enumeration_rank)
    throw Error(ErrorKind::RankTooLarge, "centralizer rank " + std::to_string(class_sums.size()) +
                                           " exceeds " + std::to_string(max_enumeration_rank));
  SpanSetup s{class_sums.empty() ? nullptr : class_sums.front().group(), augmentation_free_basis(class_sums), 1};
  if (class_sums.empty())
    s.level_one_count = 0;
  for (std::size_t i = 0; i < s.dirs.size(); ++i)
    s.level_one_count *= low.p();
  return s;
}

// The level-one element with the given index, if it is torsion mod p.
std::optional<RingElement> level_one(const SpanSetup &s, std::uint64_t index, unsigned p, unsigned cap)
{
  ZpkContext field(p, 1);
  Vector coeffs(s.dirs.size());
  for (auto &c : coeffs) {
    c = index % p;
    index /= p;
  }
  RingElement base = combine(RingElement::one(s.g, field), s.dirs, coeffs, 1);
  if (!base.pow_p_power(cap).is_one())
    return std::nullopt;
  return base;
}

// All solutions mod p^k lying over a level-one solution.
std::vector<RingElement> fiber(const SpanSetup &s, const RingElement &base, const ZpkContext &low, unsigned cap)
{
  unsigned p = low.p();
  ZpkContext field(p, 1);
  std::vector<RingElement> level{base};
  for (unsigned j = 1; j < low.k(); ++j) {
    std::vector<RingElement> next;
    for (const auto &u : level) {
      RingElement lifted = u.with_precision(j + 1);
      auto r = excess(lifted, cap, j, 1);
      if (!r)
        continue;
      auto images = derivative_images(u.with_precision(1), cap, s.dirs);
      auto sol = linearized_solve(images, *r, field);
      if (!sol)
        continue;
      for (const auto &y : enumerate_affine(*sol, p))
        next.push_back(combine(lifted, s.dirs, y, ipow(p, j)));
    }
    level = std::move(next);
  }
  for (auto &u : level)
    u = u.with_precision(low.k());
  return level;
}

} // namespace

std::vector<RingElement> enumerate_torsion_in_span(const std::vector<RingElement> &class_sums,
                                                   const ZpkContext &low, unsigned cap)
{
  SpanSetup s = setup_span(class_sums, low);
  std::vector<std::vector<RingElement>> found(s.level_one_count);
  parallel_for(s.level_one_count, [&](std::size_t index) {
    if (auto base = level_one(s, index, low.p(), cap))
      found[index] = fiber(s, *base, low, cap);
  });
  std::vector<RingElement> out;
  for (auto &bucket : found)
    for (auto &u : bucket)
      out.push_back(std::move(u));
  return out;
}

RingElement apply_symmetry(const RingElement &u, Elem x, Elem z)
{
  const auto &g = *u.group();
  Vector out(g.order(), 0);
  for (Elem a = 0; a < g.order(); ++a)
    out[g.mul(g.conj(a, x), z)] = u.coeff(a);
  return RingElement(u.group(), u.context(), std::move(out));
}

TorsionOracleResult torsion_oracle(const std::vector<RingElement> &class_sums, const ZpkContext &low,
                                   unsigned cap, unsigned delta, std::span<const Elem> conjugators,
                                   std::span<const Elem> multipliers)
{
  SpanSetup s = setup_span(class_sums, low);
  TorsionOracleResult result;
  std::vector<Elem> xs(conjugators.begin(), conjugators.end()), zs(multipliers.begin(), multipliers.end());
  if (xs.empty())
    xs.push_back(0);
  if (zs.empty())
    zs.push_back(0);

  // orbit representatives: level-one solutions that are minimal in their orbit
  struct Rep {
    RingElement base;
    std::uint64_t orbit;
  };
  std::vector<std::optional<Rep>> reps(s.level_one_count);
  parallel_for(s.level_one_count, [&](std::size_t index) {
    auto base = level_one(s, index, low.p(), cap);
    if (!base)
      return;
    std::vector<Vector> images;
    for (Elem x : xs)
      for (Elem z : zs) {
        Vector img = apply_symmetry(*base, x, z).coeffs();
        if (img < base->coeffs())
          return;
        images.push_back(std::move(img));
      }
    std::sort(images.begin(), images.end());
    auto orbit = static_cast<std::uint64_t>(std::unique(images.begin(), images.end()) - images.begin());
    reps[index] = Rep{*base, orbit};
  });

  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (reps[i])
      chosen.push_back(i);

  auto dirs = s.dirs;
  std::vector<std::uint64_t> fiber_size(chosen.size(), 0);
  std::vector<std::vector<RingElement>> genuine(chosen.size());
  std::vector<std::uint64_t> checked(chosen.size(), 0);
  parallel_for(chosen.size(), [&](std::size_t i) {
    const Rep &rep = *reps[chosen[i]];
    // the stabilizer of the base permutes its fiber; check one element per orbit
    std::vector<std::pair<Elem, Elem>> stabilizer;
    for (Elem x : xs)
      for (Elem z : zs)
        if (apply_symmetry(rep.base, x, z) == rep.base)
          stabilizer.emplace_back(x, z);
    for (auto &u : fiber(s, rep.base, low, cap)) {
      ++fiber_size[i];
      bool minimal = true;
      for (auto [x, z] : stabilizer)
        if (apply_symmetry(u, x, z).coeffs() < u.coeffs()) {
          minimal = false;
          break;
        }
      if (!minimal)
        continue;
      ++checked[i];
      if (lift_check(u, delta, dirs) == LiftVerdict::Genuine)
        genuine[i].push_back(std::move(u));
    }
  });

  std::vector<Vector> seen;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    result.solutions += reps[chosen[i]]->orbit * fiber_size[i];
    result.checked += checked[i];
    for (const auto &u : genuine[i])
      for (Elem x : xs)
        for (Elem z : zs)
          seen.push_back(apply_symmetry(u, x, z).coeffs());
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  for (auto &v : seen)
    result.genuine.emplace_back(s.g, low, std::move(v));
  return result;
}

std::vector<RingElement> enumerate_torsion_centralizer(const Subgroup &n, const ZpkContext &low)
{
  const auto &g = n.parent();
  if (!is_admissible(g, low.p()).admissible)
    throw Error(ErrorKind::HypothesisViolated, "(G, p) is not admissible");
  if (!is_p_group(n, low.p()) || !is_normal(n))
    throw Error(ErrorKind::HypothesisViolated, "N is not a normal p-subgroup");
  return enumerate_torsion_in_span(n_class_sums(n, low), low, default_order_cap(*g, low.p()));
}

} // namespace pblock
