#include "pblock/identities.hpp"

#include <algorithm>

#include "pblock/arith.hpp"
#include "pblock/errors.hpp"

namespace pblock {

using nlohmann::json;

json to_json(const CheckResult &r)
{
  json j = {{"name", r.name},          {"passed", r.passed}, {"skipped", r.skipped},
            {"trials", r.trials},      {"inconclusive", r.inconclusive}, {"seed", r.seed},     {"precision", r.precision},
            {"detail", r.detail}};
  if (r.skipped)
    j["skip_reason"] = r.skip_reason;
  j["counterexample"] = r.counterexample ? *r.counterexample : json(nullptr);
  return j;
}

CheckResult check_result_from_json(const json &j)
{
  CheckResult r;
  r.name = j.at("name").get<std::string>();
  r.passed = j.at("passed").get<bool>();
  r.skipped = j.value("skipped", false);
  r.skip_reason = j.value("skip_reason", std::string{});
  r.trials = j.value("trials", std::uint64_t{0});
  r.inconclusive = j.value("inconclusive", std::uint64_t{0});
  r.seed = j.value("seed", std::uint64_t{0});
  r.precision = j.value("precision", 0u);
  r.detail = j.value("detail", std::string{});
  if (j.contains("counterexample") && !j.at("counterexample").is_null())
    r.counterexample = j.at("counterexample");
  return r;
}

SpannedModule::SpannedModule(const ZpkContext &ctx, std::size_t ambient, std::vector<Vector> generators)
  : generators_(std::move(generators)), module_(Submodule::span(ctx, ambient, generators_))
{}

SpannedModule SpannedModule::from_submodule(const Submodule &s)
{
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < s.size(); ++i)
    rows.push_back(s.basis().row_vector(i));
  return SpannedModule(s.context(), s.ambient_rank(), std::move(rows));
}

SpannedModule operator+(const SpannedModule &a, const SpannedModule &b)
{
  SpannedModule r = a;
  r.generators_.insert(r.generators_.end(), b.generators_.begin(), b.generators_.end());
  r.module_ = a.module_ + b.module_;
  return r;
}

std::optional<json> non_membership_witness(const SpannedModule &s, std::span<const Residue> v,
                                           const std::string &claim)
{
  const auto &m = s.module();
  if (m.contains(v))
    return std::nullopt;
  const auto &ctx = m.context();
  json payload = {{"kind", "non_membership"},
                  {"claim", claim},
                  {"modulus", ctx.modulus()},
                  {"vector", Vector(v.begin(), v.end())},
                  {"generators", s.generators()},
                  {"functional", nullptr}};
  // annihilator of the module: {phi : B phi == 0} for the basis B
  Submodule ann = left_kernel(ctx, m.basis().transposed());
  for (std::size_t i = 0; i < ann.size(); ++i) {
    auto phi = ann.basis().row(i);
    Residue value = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      value = (value + phi[j] * (v[j] % ctx.modulus())) % ctx.modulus();
    if (value != 0) {
      payload["functional"] = Vector(phi.begin(), phi.end());
      break;
    }
  }
  return payload;
}

bool reverify_counterexample(const json &payload)
{
  auto kind = payload.at("kind").get<std::string>();
  auto mod = payload.at("modulus").get<std::uint64_t>();
  if (kind == "inequality") {
    auto lhs = payload.at("lhs").get<std::vector<std::uint64_t>>();
    auto rhs = payload.at("rhs").get<std::vector<std::uint64_t>>();
    for (std::size_t i = 0; i < lhs.size(); ++i)
      if (lhs[i] % mod != rhs.at(i) % mod)
        return true;
    return false;
  }
  if (kind == "non_membership") {
    if (payload.at("functional").is_null())
      return false;
    auto phi = payload.at("functional").get<std::vector<std::uint64_t>>();
    auto dot = [&](const std::vector<std::uint64_t> &x) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < x.size(); ++i)
        s = (s + (phi.at(i) % mod) * (x[i] % mod)) % mod;
      return s;
    };
    for (const auto &g : payload.at("generators"))
      if (dot(g.get<std::vector<std::uint64_t>>()) != 0)
        return false;
    return dot(payload.at("vector").get<std::vector<std::uint64_t>>()) != 0;
  }
  return false;
}

namespace {

std::size_t rank_of(const GroupPtr &g) { return g->order(); }

Vector unit_vector(std::size_t n, Elem a)
{
  Vector v(n, 0);
  v[a] = 1;
  return v;
}

Vector diff_vector(const ZpkContext &ctx, std::size_t n, Elem a, Elem b)
{
  Vector v(n, 0);
  v[a] = ctx.add(v[a], 1);
  v[b] = ctx.sub(v[b], 1);
  return v;
}

SpannedModule scalars(const GroupPtr &g, const ZpkContext &ctx)
{
  return SpannedModule(ctx, rank_of(g), {unit_vector(rank_of(g), 0)});
}

SpannedModule multiple_of_full(const GroupPtr &g, const ZpkContext &ctx, Residue m)
{
  std::vector<Vector> rows;
  for (Elem a = 0; a < g->order(); ++a) {
    Vector v(g->order(), 0);
    v[a] = m % ctx.modulus();
    rows.push_back(std::move(v));
  }
  return SpannedModule(ctx, rank_of(g), std::move(rows));
}

SpannedModule span_of(const GroupPtr &g, const ZpkContext &ctx, std::span<const Elem> t, Residue scale_by = 1)
{
  std::vector<Vector> rows;
  for (Elem a : t) {
    Vector v(g->order(), 0);
    v[a] = scale_by % ctx.modulus();
    rows.push_back(std::move(v));
  }
  return SpannedModule(ctx, rank_of(g), std::move(rows));
}

SpannedModule commutator(const GroupPtr &g, const ZpkContext &ctx)
{
  std::vector<Vector> rows;
  for (Elem a = 0; a < g->order(); ++a)
    for (Elem h : g->generators())
      if (g->conj(a, h) != a)
        rows.push_back(diff_vector(ctx, g->order(), g->conj(a, h), a));
  return SpannedModule(ctx, rank_of(g), std::move(rows));
}

SpannedModule twisted(const GroupPtr &g, const ZpkContext &ctx, Elem c)
{
  std::vector<Vector> rows;
  for (Elem a = 0; a < g->order(); ++a)
    if (g->conj(a, c) != a)
      rows.push_back(diff_vector(ctx, g->order(), a, g->conj(a, c)));
  return SpannedModule(ctx, rank_of(g), std::move(rows));
}

SpannedModule aug_ideal(const Subgroup &h, const ZpkContext &ctx)
{
  if (!is_normal(h))
    throw Error(ErrorKind::NotNormal, "I(H)G requires a normal subgroup");
  const auto &g = h.parent();
  std::vector<Vector> rows;
  for (Elem x : h.generators())
    for (Elem a = 0; a < g->order(); ++a)
      rows.push_back(diff_vector(ctx, g->order(), g->mul(x, a), a));
  return SpannedModule(ctx, rank_of(g), std::move(rows));
}

CheckResult start(const std::string &name, const ZpkContext &ctx, std::uint64_t seed = 0)
{
  CheckResult r;
  r.name = name;
  r.precision = ctx.k();
  r.seed = seed;
  return r;
}

// Records a failed membership; returns false when x is not in s.
bool expect_member(CheckResult &r, const SpannedModule &s, const RingElement &x, const std::string &claim)
{
  auto witness = non_membership_witness(s, x.coeffs(), claim);
  if (!witness)
    return true;
  r.passed = false;
  r.counterexample = std::move(*witness);
  r.detail = claim;
  return false;
}

bool expect_equal(CheckResult &r, const RingElement &lhs, const RingElement &rhs, const std::string &claim)
{
  if (lhs == rhs)
    return true;
  r.passed = false;
  r.detail = claim;
  r.counterexample = json{{"kind", "inequality"},
                          {"claim", claim},
                          {"modulus", lhs.context().modulus()},
                          {"lhs", lhs.coeffs()},
                          {"rhs", rhs.coeffs()}};
  return false;
}

// Every basis row of `a` must lie in `b`.
bool expect_contained(CheckResult &r, const SpannedModule &a, const SpannedModule &b, const std::string &claim)
{
  const auto &m = a.module();
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto witness = non_membership_witness(b, m.basis().row(i), claim);
    if (witness) {
      r.passed = false;
      r.detail = claim;
      r.counterexample = std::move(*witness);
      return false;
    }
  }
  return true;
}

void require_normal_p_subgroup_with_centralizer(const Subgroup &n, unsigned p)
{
  if (!is_p_group(n, p))
    throw Error(ErrorKind::HypothesisViolated, "N is not a p-subgroup");
  if (!is_normal(n))
    throw Error(ErrorKind::HypothesisViolated, "N is not normal");
  Subgroup c = centralizer(n.parent(), n.members());
  for (Elem x : c.members())
    if (!n.contains(x))
      throw Error(ErrorKind::HypothesisViolated,
                  "C_G(N) is not contained in N (witness " + n.parent()->label(x) + ")");
}

std::vector<Elem> complement(const GroupPtr &g, std::span<const Elem> t)
{
  std::vector<bool> in(g->order(), false);
  for (Elem a : t)
    in[a] = true;
  std::vector<Elem> out;
  for (Elem a = 0; a < g->order(); ++a)
    if (!in[a])
      out.push_back(a);
  return out;
}

// Sums of the orbits of `set` under conjugation by the subgroup `s`.
std::vector<RingElement> conjugation_orbit_sums(const Subgroup &s, std::span<const Elem> set,
                                                const ZpkContext &ctx)
{
  const auto &g = s.parent();
  std::vector<bool> done(g->order(), false);
  std::vector<RingElement> sums;
  for (Elem a : set) {
    if (done[a])
      continue;
    std::vector<Elem> orbit;
    for (Elem x : s.members()) {
      Elem b = g->conj(a, x);
      if (!done[b]) {
        done[b] = true;
        orbit.push_back(b);
      }
    }
    sums.push_back(RingElement::sum_of(g, ctx, orbit));
  }
  return sums;
}

} // namespace

std::vector<Elem> involution_lifts(const GroupPtr &g)
{
  Subgroup o2 = o_p(g, 2);
  QuotientMap q = quotient_by(o2);
  std::vector<Elem> lifts;
  for (Elem bar = 1; bar < q.quotient->order(); ++bar) {
    if (q.quotient->element_order(bar) != 2)
      continue;
    for (Elem a = 0; a < g->order(); ++a)
      if (q.projection[a] == bar) {
        lifts.push_back(a);
        break;
      }
  }
  return lifts;
}

CheckResult check_sbor_a(const Subgroup &n, const ZpkContext &ctx)
{
  require_normal_p_subgroup_with_centralizer(n, ctx.p());
  const auto &g = n.parent();
  CheckResult r = start("sbor-a", ctx);
  SpannedModule target = scalars(g, ctx) + aug_ideal(n, ctx) + multiple_of_full(g, ctx, ctx.p());
  for (const auto &sum : n_class_sums(n, ctx)) {
    ++r.trials;
    if (!expect_member(r, target, sum, "N-class sum in R + I(N)G + pRG"))
      break;
  }
  return r;
}

CheckResult check_sbor_b(const GroupPtr &g, const ZpkContext &ctx)
{
  if (ctx.p() != 2)
    throw Error(ErrorKind::HypothesisViolated, "sbor-b is a statement for p = 2");
  Subgroup n = o_p(g, 2);
  require_normal_p_subgroup_with_centralizer(n, 2);
  CheckResult r = start("sbor-b", ctx);
  auto t = involution_lifts(g);
  SpannedModule target = scalars(g, ctx) + aug_ideal(n, ctx) + multiple_of_full(g, ctx, 4) +
                         span_of(g, ctx, t, 2);
  for (const auto &sum : n_class_sums(n, ctx)) {
    ++r.trials;
    if (!expect_member(r, target, sum, "N-class sum in R + I(O_2)G + 4RG + 2R[T]"))
      break;
  }
  r.detail = "|T| = " + std::to_string(t.size());
  return r;
}

CheckResult check_formula_11(const GroupPtr &g, const ZpkContext &ctx)
{
  CheckResult r = start("formula-11", ctx);
  SpannedModule comm = commutator(g, ctx);
  SpannedModule sat = SpannedModule::from_submodule(saturate(comm.module()));
  r.trials = 1;
  expect_contained(r, sat, comm, "saturation of [RG,RG] equals [RG,RG]");
  return r;
}

CheckResult check_formula_12(const GroupPtr &g, const ZpkContext &ctx, std::uint64_t trials, std::uint64_t seed)
{
  CheckResult r = start("formula-12", ctx, seed);
  SpannedModule comm = commutator(g, ctx);
  SpannedModule target = multiple_of_full(g, ctx, ctx.p()) + comm;
  std::vector<RingElement> gens;
  for (const auto &v : comm.generators())
    gens.emplace_back(g, ctx, v);
  if (gens.empty())
    gens.push_back(RingElement::zero(g, ctx));
  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    RingElement x = random_combination(gens, ctx.modulus(), rng);
    ++r.trials;
    if (!expect_member(r, target, x.pow(ctx.p()), "x^p in pRG + [RG,RG] for x in [RG,RG]"))
      break;
  }
  return r;
}

CheckResult check_formula_13(const GroupPtr &g, const ZpkContext &ctx, unsigned l, unsigned n,
                             std::uint64_t trials, std::uint64_t seed)
{
  if (l < 1 || n < 1)
    throw Error(ErrorKind::InputError, "formula-13 needs l >= 1 and n >= 1");
  CheckResult r = start("formula-13", ctx, seed);
  SpannedModule target = multiple_of_full(g, ctx, ctx.p()) + commutator(g, ctx);
  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    RingElement sum = RingElement::zero(g, ctx);
    RingElement powers = RingElement::zero(g, ctx);
    for (unsigned i = 0; i < l; ++i) {
      RingElement a = random_element(g, ctx, rng);
      sum += a;
      powers += a.pow_p_power(n);
    }
    ++r.trials;
    if (!expect_member(r, target, sum.pow_p_power(n) - powers,
                       "(a_1+...+a_l)^(p^n) - sum a_i^(p^n) in pRG + [RG,RG]"))
      break;
  }
  r.detail = "l = " + std::to_string(l) + ", n = " + std::to_string(n);
  return r;
}

CheckResult check_formula_14(const GroupPtr &g, const ZpkContext &ctx, std::uint64_t trials,
                             std::uint64_t seed, unsigned n)
{
  unsigned minimal = std::max(1u, p_valuation(g->order(), ctx.p()));
  if (n == 0)
    n = minimal;
  if (n < minimal)
    throw Error(ErrorKind::HypothesisViolated, "p^n must be at least the p-part of |G|");
  CheckResult r = start("formula-14", ctx, seed);
  auto sets = special_sets(g, ctx.p());
  SpannedModule target =
    multiple_of_full(g, ctx, ctx.p()) + commutator(g, ctx) + span_of(g, ctx, sets.p_prime_elements);
  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    RingElement x = random_element(g, ctx, rng);
    ++r.trials;
    if (!expect_member(r, target, x.pow_p_power(n), "x^(p^n) in pRG + [RG,RG] + R[G_p']"))
      break;
  }
  r.detail = "n = " + std::to_string(n);
  return r;
}

CheckResult check_formula_2(const GroupPtr &g, Elem c, const ZpkContext &ctx)
{
  CheckResult r = start("formula-2", ctx);
  r.trials = 1;
  SpannedModule tw = twisted(g, ctx, c);
  SpannedModule kernel = SpannedModule::from_submodule(norm_kernel(g, c, ctx));
  SpannedModule sat = SpannedModule::from_submodule(saturate(tw.module()));
  std::string at = " (c = " + g->label(c) + ")";
  if (!expect_contained(r, kernel, tw, "norm kernel inside [RG]^(1-c)" + at) ||
      !expect_contained(r, tw, kernel, "[RG]^(1-c) inside norm kernel" + at) ||
      !expect_contained(r, sat, tw, "saturation of [RG]^(1-c) equals [RG]^(1-c)" + at))
    return r;

  RingElement ce = RingElement::of(g, ctx, c);
  const auto &basis = tw.module().basis();
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    RingElement b(g, ctx, basis.row_vector(i));
    if (!expect_member(r, tw, ce * b, "c * [RG]^(1-c) inside [RG]^(1-c)" + at) ||
        !expect_member(r, tw, b * ce, "[RG]^(1-c) * c inside [RG]^(1-c)" + at))
      return r;
  }
  return r;
}

CheckResult check_formula_2_all(const GroupPtr &g, const ZpkContext &ctx)
{
  CheckResult r = start("formula-2", ctx);
  for (Elem c = 0; c < g->order(); ++c) {
    CheckResult one = check_formula_2(g, c, ctx);
    ++r.trials;
    if (!one.passed)
      return one;
  }
  r.detail = "all c in G";
  return r;
}

CheckResult check_lemma_odd(const GroupPtr &g, const ZpkContext &ctx, std::uint64_t trials, std::uint64_t seed)
{
  if (ctx.p() == 2)
    throw Error(ErrorKind::HypothesisViolated, "lemma-odd is a statement for odd p");
  CheckResult r = start("lemma-odd", ctx, seed);
  unsigned k = ctx.k();
  unsigned margin = k / 2; // ceil((k-1)/2)
  Residue margin_power = ipow(ctx.p(), margin);
  RingElement one = RingElement::one(g, ctx);
  Rng rng(seed);
  std::uint64_t hits = 0;

  auto inspect = [&](const RingElement &u) {
    if (!u.pow(ctx.p()).is_one())
      return true;
    ++hits;
    RingElement d = u - one;
    for (Residue c : d.coeffs())
      if (c % margin_power != 0) {
        r.passed = false;
        r.detail = "u^p = 1 with u - 1 not in p^" + std::to_string(margin) + "RG";
        r.counterexample = json{{"kind", "inequality"},
                                {"claim", r.detail},
                                {"modulus", margin_power},
                                {"lhs", d.coeffs()},
                                {"rhs", Vector(d.coeffs().size(), 0)}};
        return false;
      }
    return true;
  };

  // constructed near-torsion: 1 + p^(k-1) x always satisfies u^p = 1
  for (std::uint64_t t = 0; t < std::min<std::uint64_t>(trials, 100); ++t) {
    RingElement u = one + random_element(g, ctx, rng) * ctx.power_of_p(k - 1);
    ++r.trials;
    if (!u.pow(ctx.p()).is_one()) {
      expect_equal(r, u.pow(ctx.p()), one, "(1 + p^(k-1) x)^p = 1");
      return r;
    }
    if (!inspect(u))
      return r;
  }
  // random search over 1 + p^a RG, a uniform in [1, k-1]
  for (std::uint64_t t = 0; t < trials; ++t) {
    unsigned a = 1 + static_cast<unsigned>(rng.below(std::max(1u, k - 1)));
    RingElement u = one + random_element(g, ctx, rng) * ctx.power_of_p(a);
    ++r.trials;
    if (!inspect(u))
      return r;
  }
  r.detail = std::to_string(hits) + " torsion hits, margin p^" + std::to_string(margin);
  return r;
}

HypothesisPair make_hypothesis_pair(const GroupPtr &g, const ZpkContext &ctx, Elem c, Rng &rng)
{
  if (ctx.p() != 2)
    throw Error(ErrorKind::HypothesisViolated, "hypothesis pairs are built for p = 2");
  if (!is_p_power(g->element_order(c), 2))
    throw Error(ErrorKind::HypothesisViolated, "c is not a 2-element");
  Elem c2 = g->mul(c, c);
  Subgroup s = generated_subgroup(g, std::span(&c2, 1));
  auto invols = special_sets(g, 2).involutions;

  RingElement m = RingElement::zero(g, ctx);
  for (const auto &sum : conjugation_orbit_sums(s, invols, ctx))
    m += sum * rng.below(ctx.modulus());
  std::vector<Elem> all(g->order());
  for (Elem a = 0; a < g->order(); ++a)
    all[a] = a;
  for (const auto &sum : conjugation_orbit_sums(s, all, ctx))
    m += sum * (2 * rng.below(ctx.modulus()));

  RingElement v = RingElement::one(g, ctx) + m * 2;
  RingElement u = conjugate(RingElement::of(g, ctx, c), v);
  return {c, std::move(u), std::move(v)};
}

HypothesisPair make_hypothesis_pair(const GroupPtr &g, const ZpkContext &ctx, Rng &rng)
{
  std::vector<Elem> two_elements;
  for (Elem a = 1; a < g->order(); ++a)
    if (is_p_power(g->element_order(a), 2))
      two_elements.push_back(a);
  Elem c = two_elements.empty() ? 0 : two_elements[rng.below(two_elements.size())];
  return make_hypothesis_pair(g, ctx, c, rng);
}

CheckResult check_lemma_abc(const GroupPtr &g, Elem c, const RingElement &u, const ZpkContext &ctx)
{
  if (ctx.p() != 2 || ctx.k() < 2)
    throw Error(ErrorKind::HypothesisViolated, "lemma-abc needs p = 2 and k >= 2");
  if (!is_p_power(g->element_order(c), 2))
    throw Error(ErrorKind::HypothesisViolated, "c is not a 2-element");
  if (!unit_order(u).resolved())
    throw Error(ErrorKind::HypothesisViolated, "u is not of 2-power order within the cap");
  if (u.augmentation() != 1)
    throw Error(ErrorKind::HypothesisViolated, "u does not have augmentation one");
  RingElement ce = RingElement::of(g, ctx, c);
  RingElement ci = RingElement::of(g, ctx, g->inv(c));
  if (!(ce * ce == u * u))
    throw Error(ErrorKind::HypothesisViolated, "c^2 != u^2");
  RingElement t = ci * u - RingElement::one(g, ctx); // 2f
  RingElement f = t.divide_by_p();                    // precision k-1

  CheckResult r = start("lemma-abc", ctx);
  r.trials = 1;

  // 4(f + f^2) u^-1 c == c u^-1 - (c u^-1)^c, exactly at precision k
  RingElement ui = invert(u);
  RingElement lhs = (t * 2 + t * t) * ui * ce;
  RingElement cu = ce * ui;
  RingElement rhs = cu - ci * cu * ce;
  if (!expect_equal(r, lhs, rhs, "4(f+f^2)u^-1 c = cu^-1 - (cu^-1)^c"))
    return r;

  ZpkContext low = f.context();
  SpannedModule two = multiple_of_full(g, low, 2);
  SpannedModule comm = commutator(g, low);
  if (!expect_member(r, two + twisted(g, low, c), f + f * f, "(a) f + f^2 in 2RG + [RG]^(1-c)"))
    return r;
  SpannedModule two_comm = two + comm;
  unsigned cap = default_order_cap(*g, 2);
  for (unsigned n = 1; n <= cap; ++n)
    if (!expect_member(r, two_comm, f + f.pow_p_power(n), "(b) f + f^(2^n) in 2RG + [RG,RG]"))
      return r;
  auto odd = special_sets(g, 2).p_prime_elements;
  expect_member(r, two_comm + span_of(g, low, odd), f, "(c) f in 2RG + [RG,RG] + R[G_2']");
  r.precision = low.k();
  return r;
}

CheckResult check_lemma_abc_pairs(const GroupPtr &g, const ZpkContext &ctx, std::uint64_t pairs,
                                  std::uint64_t seed)
{
  CheckResult r = start("lemma-abc", ctx, seed);
  r.precision = ctx.k() - 1;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    Rng rng(Rng::trial_seed(seed, i));
    HypothesisPair pair = make_hypothesis_pair(g, ctx, rng);
    CheckResult one = check_lemma_abc(g, pair.c, pair.u, ctx);
    ++r.trials;
    if (!one.passed) {
      one.seed = seed;
      one.trials = r.trials;
      if (one.counterexample)
        (*one.counterexample)["inputs"] = json{{"c", pair.c}, {"u", to_json(pair.u)}};
      return one;
    }
  }
  r.detail = "constructed pairs (c, c^(1+2m))";
  return r;
}

CheckResult check_lemma_l1(const GroupPtr &g, const ZpkContext &ctx, std::uint64_t trials, std::uint64_t seed)
{
  if (ctx.p() != 2)
    throw Error(ErrorKind::HypothesisViolated, "lemma-l1 is a statement for p = 2");
  CheckResult r = start("lemma-l1", ctx, seed);
  auto invols = special_sets(g, 2).involutions;
  if (invols.empty()) {
    r.detail = "no involutions";
    return r;
  }
  auto others = complement(g, invols);
  Submodule off_t = intersect(span_of(g, ctx, others).module(), commutator(g, ctx).module());
  SpannedModule target = multiple_of_full(g, ctx, 2) + SpannedModule::from_submodule(off_t);
  RingElement one = RingElement::one(g, ctx);
  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    RingElement x = RingElement::zero(g, ctx);
    for (Elem s : invols)
      x += (RingElement::of(g, ctx, s) - one) * rng.below(ctx.modulus());
    ++r.trials;
    if (!expect_member(r, target, x * x, "x^2 in (R[G\\T2] ∩ [RG,RG]) + 2RG"))
      break;
  }
  return r;
}

CheckResult check_centralizer_local(const Subgroup &n, unsigned p, std::uint64_t trials, std::uint64_t seed)
{
  require_normal_p_subgroup_with_centralizer(n, p);
  const auto &g = n.parent();
  ZpkContext field(p, 1);
  CheckResult r = start("centralizer-local", field, seed);
  SpannedModule ideal = aug_ideal(n, field);
  RingElement one = RingElement::one(g, field);
  unsigned steps = 0;
  while (ipow(p, steps) < g->order())
    ++steps;

  auto decompose = [&](const RingElement &b) {
    RingElement nu = b - one * b.augmentation();
    ++r.trials;
    if (!expect_member(r, ideal, nu, "x - eps(x) in I(N)G over F_p"))
      return false;
    return expect_equal(r, nu.pow_p_power(steps), RingElement::zero(g, field),
                        "x - eps(x) is nilpotent over F_p");
  };

  auto basis = n_class_sums(n, field);
  for (const auto &b : basis)
    if (!decompose(b))
      return r;
  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t)
    if (!decompose(random_combination(basis, p, rng)))
      return r;
  r.detail = std::to_string(basis.size()) + " class sums";
  return r;
}

} // namespace pblock
