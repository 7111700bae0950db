#include "pblock/group_ring.hpp"

#include <algorithm>

#include "pblock/arith.hpp"
#include "pblock/errors.hpp"

namespace pblock {

RingElement::RingElement(GroupPtr group, const ZpkContext &ctx)
  : group_(std::move(group)), ctx_(ctx), coeffs_(group_->order(), 0)
{}

RingElement::RingElement(GroupPtr group, const ZpkContext &ctx, Vector coeffs)
  : group_(std::move(group)), ctx_(ctx), coeffs_(std::move(coeffs))
{
  if (coeffs_.size() != group_->order())
    throw Error(ErrorKind::DimensionMismatch, "coefficient vector length differs from |G|");
  for (auto &c : coeffs_)
    c %= ctx_.modulus();
}

RingElement RingElement::of(const GroupPtr &group, const ZpkContext &ctx, Elem g)
{
  RingElement x(group, ctx);
  x.coeffs_.at(g) = 1 % ctx.modulus();
  return x;
}

RingElement RingElement::scalar(const GroupPtr &group, const ZpkContext &ctx, Residue r)
{
  RingElement x(group, ctx);
  x.coeffs_[0] = r % ctx.modulus();
  return x;
}

RingElement RingElement::sum_of(const GroupPtr &group, const ZpkContext &ctx, std::span<const Elem> elems)
{
  RingElement x(group, ctx);
  for (Elem g : elems)
    x.coeffs_.at(g) = ctx.add(x.coeffs_[g], 1);
  return x;
}

void RingElement::check_compatible(const RingElement &o) const
{
  if (group_ != o.group_ || !(ctx_ == o.ctx_))
    throw Error(ErrorKind::ContextMismatch, "ring elements from different group rings");
}

RingElement RingElement::operator+(const RingElement &o) const
{
  RingElement r = *this;
  r += o;
  return r;
}

RingElement RingElement::operator-(const RingElement &o) const
{
  RingElement r = *this;
  r -= o;
  return r;
}

RingElement RingElement::operator-() const
{
  RingElement r = *this;
  for (auto &c : r.coeffs_)
    c = ctx_.neg(c);
  return r;
}

RingElement &RingElement::operator+=(const RingElement &o)
{
  check_compatible(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = ctx_.add(coeffs_[i], o.coeffs_[i]);
  return *this;
}

RingElement &RingElement::operator-=(const RingElement &o)
{
  check_compatible(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = ctx_.sub(coeffs_[i], o.coeffs_[i]);
  return *this;
}

void multiply_into(const FiniteGroup &g, const ZpkContext &ctx, std::span<const Residue> x,
                   std::span<const Residue> y, std::span<Residue> out)
{
  std::size_t n = g.order();
  std::fill(out.begin(), out.end(), 0);
  for (Elem a = 0; a < n; ++a) {
    Residue xa = x[a];
    if (xa == 0)
      continue;
    const Elem *row = g.row(a);
    for (Elem b = 0; b < n; ++b)
      out[row[b]] += xa * y[b];
  }
  for (auto &c : out)
    c %= ctx.modulus();
}

RingElement RingElement::operator*(const RingElement &o) const
{
  check_compatible(o);
  RingElement r(group_, ctx_);
  multiply_into(*group_, ctx_, coeffs_, o.coeffs_, r.coeffs_);
  return r;
}

RingElement RingElement::operator*(Residue s) const
{
  RingElement r = *this;
  for (auto &c : r.coeffs_)
    c = ctx_.mul(c, s % ctx_.modulus());
  return r;
}

RingElement operator*(Residue r, const RingElement &x) { return x * r; }

bool operator==(const RingElement &a, const RingElement &b)
{
  return a.group_ == b.group_ && a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
}

bool RingElement::is_zero() const
{
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

bool RingElement::is_one() const { return as_group_element() == Elem{0}; }

Residue RingElement::augmentation() const
{
  Residue s = 0;
  for (Residue c : coeffs_)
    s += c;
  return s % ctx_.modulus();
}

RingElement RingElement::pow(std::uint64_t e) const
{
  RingElement result = one(group_, ctx_);
  RingElement base = *this;
  while (e) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e)
      base = base * base;
  }
  return result;
}

RingElement RingElement::pow_p_power(unsigned a) const
{
  RingElement r = *this;
  for (unsigned i = 0; i < a; ++i)
    r = r.pow(ctx_.p());
  return r;
}

std::optional<Elem> RingElement::as_group_element() const
{
  std::optional<Elem> found;
  for (Elem g = 0; g < coeffs_.size(); ++g) {
    if (coeffs_[g] == 0)
      continue;
    if (coeffs_[g] != 1 % ctx_.modulus() || found)
      return std::nullopt;
    found = g;
  }
  return found;
}

RingElement RingElement::with_precision(unsigned k) const
{
  return RingElement(group_, ctx_.with_precision(k), coeffs_);
}

RingElement RingElement::divide_by_p() const
{
  if (ctx_.k() < 2)
    throw Error(ErrorKind::HypothesisViolated, "cannot divide by p at precision 1");
  Vector q(coeffs_.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (coeffs_[i] % ctx_.p() != 0)
      throw Error(ErrorKind::HypothesisViolated, "element is not divisible by p");
    q[i] = coeffs_[i] / ctx_.p();
  }
  return RingElement(group_, ctx_.with_precision(ctx_.k() - 1), std::move(q));
}

RingElement RingElement::times_group_element(Elem g) const
{
  RingElement r(group_, ctx_);
  for (Elem a = 0; a < coeffs_.size(); ++a)
    r.coeffs_[group_->mul(a, g)] = coeffs_[a];
  return r;
}

Matrix right_multiplication_matrix(const RingElement &x)
{
  const auto &g = *x.group();
  std::size_t n = g.order();
  Matrix m(n, n);
  for (Elem h = 0; h < n; ++h)
    for (Elem a = 0; a < n; ++a)
      if (x.coeff(a) != 0)
        m.at(h, g.mul(h, a)) = x.context().add(m.at(h, g.mul(h, a)), x.coeff(a));
  return m;
}

Matrix left_multiplication_matrix(const RingElement &x)
{
  const auto &g = *x.group();
  std::size_t n = g.order();
  Matrix m(n, n);
  for (Elem h = 0; h < n; ++h)
    for (Elem a = 0; a < n; ++a)
      if (x.coeff(a) != 0)
        m.at(h, g.mul(a, h)) = x.context().add(m.at(h, g.mul(a, h)), x.coeff(a));
  return m;
}

std::optional<RingElement> try_invert(const RingElement &x)
{
  const auto &ctx = x.context();
  std::size_t n = x.group()->order();
  ZpkContext field(ctx.p(), 1);

  // y M == x y; solve y M == 1 over Z/p, i.e. M^T y^T == e_1
  Matrix mt = left_multiplication_matrix(x.with_precision(1)).transposed();
  Vector e1(n, 0);
  e1[0] = 1;
  auto sol = try_solve(field, mt, e1);
  if (!sol || !sol->kernel.is_zero())
    return std::nullopt;

  RingElement y(x.group(), ctx, sol->particular);
  RingElement two = RingElement::scalar(x.group(), ctx, 2);
  for (unsigned i = 0; i < 64; ++i) {
    RingElement xy = x * y;
    if (xy.is_one())
      break;
    y = y * (two - xy);
  }
  if (!(x * y).is_one() || !(y * x).is_one())
    throw Error(ErrorKind::NotUnit, "Hensel lifting of the inverse did not converge");
  return y;
}

RingElement invert(const RingElement &x)
{
  auto y = try_invert(x);
  if (!y)
    throw Error(ErrorKind::NotUnit, "element is not invertible (singular mod p)");
  return std::move(*y);
}

bool is_unit(const RingElement &x)
{
  std::size_t n = x.group()->order();
  ZpkContext field(x.context().p(), 1);
  Matrix mt = left_multiplication_matrix(x.with_precision(1)).transposed();
  Vector e1(n, 0);
  e1[0] = 1;
  auto sol = try_solve(field, mt, e1);
  return sol && sol->kernel.is_zero();
}

unsigned default_order_cap(const FiniteGroup &g, unsigned p) { return p_valuation(g.order(), p) + 2; }

UnitOrderResult unit_order(const RingElement &u, unsigned cap)
{
  if (!is_unit(u))
    throw Error(ErrorKind::NotUnit, "order requested for a non-unit");
  RingElement w = u;
  for (unsigned a = 0; a <= cap; ++a) {
    if (w.is_one())
      return {a};
    w = w.pow(u.context().p());
  }
  return {std::nullopt};
}

UnitOrderResult unit_order(const RingElement &u)
{
  return unit_order(u, default_order_cap(*u.group(), u.context().p()));
}

RingElement conjugate(const RingElement &x, const RingElement &v) { return invert(v) * x * v; }

DistinguishedSubmodules::DistinguishedSubmodules(GroupPtr group, const ZpkContext &ctx)
  : group_(std::move(group)), ctx_(ctx)
{}

namespace {

Vector difference(std::size_t n, const ZpkContext &ctx, Elem a, Elem b)
{
  Vector v(n, 0);
  v[a] = ctx.add(v[a], 1);
  v[b] = ctx.sub(v[b], 1);
  return v;
}

} // namespace

std::vector<Vector> DistinguishedSubmodules::commutator_generators() const
{
  const auto &g = *group_;
  std::vector<Vector> rows;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem h = 0; h < g.order(); ++h)
      rows.push_back(difference(g.order(), ctx_, g.conj(a, h), a));
  return rows;
}

Submodule DistinguishedSubmodules::commutator() const
{
  // g^h - g for h in a generating set already spans: g^(hk) - g telescopes.
  const auto &g = *group_;
  std::vector<Vector> rows;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem h : g.generators())
      if (g.conj(a, h) != a)
        rows.push_back(difference(g.order(), ctx_, g.conj(a, h), a));
  return Submodule::span(ctx_, g.order(), rows);
}

std::vector<Vector> DistinguishedSubmodules::twisted_generators(Elem c) const
{
  const auto &g = *group_;
  std::vector<Vector> rows;
  for (Elem a = 0; a < g.order(); ++a)
    rows.push_back(difference(g.order(), ctx_, a, g.conj(a, c)));
  return rows;
}

Submodule DistinguishedSubmodules::twisted(Elem c) const
{
  return Submodule::span(ctx_, group_->order(), twisted_generators(c));
}

Submodule DistinguishedSubmodules::aug_ideal(const Subgroup &h) const
{
  if (!is_normal(h))
    throw Error(ErrorKind::NotNormal, "I(H)G requires a normal subgroup");
  const auto &g = *group_;
  std::vector<Vector> rows;
  for (Elem x : h.generators())
    for (Elem a = 0; a < g.order(); ++a)
      rows.push_back(difference(g.order(), ctx_, g.mul(x, a), a));
  return Submodule::span(ctx_, g.order(), rows);
}

Submodule DistinguishedSubmodules::aug_ideal_of_subring(const Subgroup &h) const
{
  std::vector<Vector> rows;
  for (Elem x : h.members())
    if (x != 0)
      rows.push_back(difference(group_->order(), ctx_, x, 0));
  return Submodule::span(ctx_, group_->order(), rows);
}

Submodule DistinguishedSubmodules::span(std::span<const Elem> t) const
{
  std::vector<std::uint32_t> coords(t.begin(), t.end());
  return Submodule::coordinate(ctx_, group_->order(), coords);
}

Submodule DistinguishedSubmodules::scalars() const
{
  std::uint32_t one = 0;
  return Submodule::coordinate(ctx_, group_->order(), std::span(&one, 1));
}

Submodule DistinguishedSubmodules::multiple_of_full(Residue m) const
{
  return Submodule::multiple_of_full(ctx_, group_->order(), m);
}

RingElement n_class_sum(const Subgroup &n, Elem g, const ZpkContext &ctx)
{
  auto orbit = n_class_orbit(n, g);
  return RingElement::sum_of(n.parent(), ctx, orbit);
}

std::vector<RingElement> n_class_sums(const Subgroup &n, const ZpkContext &ctx)
{
  if (!is_normal(n))
    throw Error(ErrorKind::NotNormal, "class sums require a normal subgroup");
  const auto &g = n.parent();
  std::vector<bool> done(g->order(), false);
  std::vector<RingElement> sums;
  for (Elem a = 0; a < g->order(); ++a) {
    if (done[a])
      continue;
    auto orbit = n_class_orbit(n, a);
    for (Elem x : orbit)
      done[x] = true;
    sums.push_back(RingElement::sum_of(g, ctx, orbit));
  }
  return sums;
}

Submodule centralizer_in_ring(const Subgroup &n, const ZpkContext &ctx)
{
  const auto &g = *n.parent();
  auto gens = n.generators();
  std::size_t size = g.order();
  Matrix m(size, size * std::max<std::size_t>(gens.size(), 1));
  for (std::size_t t = 0; t < gens.size(); ++t) {
    Elem x = gens[t];
    for (Elem h = 0; h < size; ++h) {
      // h x - x h
      std::size_t c1 = t * size + g.mul(h, x), c2 = t * size + g.mul(x, h);
      m.at(h, c1) = ctx.add(m.at(h, c1), 1);
      m.at(h, c2) = ctx.sub(m.at(h, c2), 1);
    }
  }
  return lattice_left_kernel(ctx, m);
}

Submodule collapse_kernel(const Subgroup &h, const ZpkContext &ctx)
{
  QuotientMap q = quotient_by(h);
  Matrix m(q.parent->order(), q.quotient->order());
  for (Elem a = 0; a < q.parent->order(); ++a)
    m.at(a, q.projection[a]) = 1;
  return lattice_left_kernel(ctx, m);
}

RingElement project(const RingElement &x, const QuotientMap &q)
{
  if (x.group() != q.parent)
    throw Error(ErrorKind::ContextMismatch, "projection from a different group");
  RingElement y(q.quotient, x.context());
  Vector c(q.quotient->order(), 0);
  for (Elem a = 0; a < x.group()->order(); ++a)
    c[q.projection[a]] = x.context().add(c[q.projection[a]], x.coeff(a));
  return RingElement(q.quotient, x.context(), std::move(c));
}

Submodule norm_kernel(const GroupPtr &g, Elem c, const ZpkContext &ctx)
{
  std::size_t n = g->order();
  std::size_t ord = g->element_order(c);
  Matrix m(n, n);
  for (Elem a = 0; a < n; ++a) {
    Elem x = a;
    for (std::size_t i = 0; i < ord; ++i) {
      m.at(a, x) = ctx.add(m.at(a, x), 1);
      x = g->conj(x, c);
    }
  }
  return lattice_left_kernel(ctx, m);
}

RingElement random_element(const GroupPtr &g, const ZpkContext &ctx, Rng &rng)
{
  Vector c(g->order());
  for (auto &x : c)
    x = rng.below(ctx.modulus());
  return RingElement(g, ctx, std::move(c));
}

RingElement random_unit(const GroupPtr &g, const ZpkContext &ctx, Rng &rng)
{
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RingElement x = random_element(g, ctx, rng);
    Residue e = x.augmentation();
    if (e % ctx.p() == 0)
      continue;
    x = x * ctx.inverse(e);
    if (is_unit(x))
      return x;
  }
  throw Error(ErrorKind::NotUnit, "no random unit found in 1000 draws");
}

RingElement structured_unit(const GroupPtr &g, const ZpkContext &ctx, Elem base, Rng &rng)
{
  RingElement r = random_element(g, ctx, rng);
  RingElement u = RingElement::one(g, ctx) + r * ctx.p();
  return RingElement::of(g, ctx, base) * u;
}

RingElement random_combination(std::span<const RingElement> basis, Residue bound, Rng &rng)
{
  if (basis.empty())
    throw Error(ErrorKind::InputError, "random combination of an empty basis");
  RingElement x = RingElement::zero(basis.front().group(), basis.front().context());
  for (const auto &b : basis)
    x += b * rng.below(bound);
  return x;
}

RingElement random_unit_in_span(std::span<const RingElement> basis, Rng &rng)
{
  if (basis.empty())
    throw Error(ErrorKind::InputError, "random unit in an empty span");
  const auto &ctx = basis.front().context();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RingElement x = random_combination(basis, ctx.modulus(), rng);
    Residue e = x.augmentation();
    if (e % ctx.p() == 0)
      continue;
    x = x * ctx.inverse(e);
    if (is_unit(x))
      return x;
  }
  throw Error(ErrorKind::NotUnit, "no unit of augmentation one found in 1000 draws");
}

nlohmann::json to_json(const RingElement &x)
{
  return {{"group", x.group()->name()},
          {"p", x.context().p()},
          {"k", x.context().k()},
          {"coeffs", x.coeffs()}};
}

RingElement ring_element_from_json(const nlohmann::json &j, const GroupPtr &g)
{
  try {
    if (j.at("group").get<std::string>() != g->name())
      throw Error(ErrorKind::InputError, "ring element belongs to group " + j.at("group").get<std::string>());
    ZpkContext ctx(j.at("p").get<unsigned>(), j.at("k").get<unsigned>());
    return RingElement(g, ctx, j.at("coeffs").get<Vector>());
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorKind::InputError, std::string("malformed ring element: ") + e.what());
  }
}

} // namespace pblock
