#include "pblock/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "pblock/arith.hpp"
#include "pblock/errors.hpp"

namespace pblock {

namespace {

Permutation compose(const Permutation &a, const Permutation &b)
{
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = b[a[i]];
  return r;
}

std::vector<Elem> close_under_products(const FiniteGroup &g, std::span<const Elem> elems)
{
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> members{0};
  seen[0] = true;
  std::vector<Elem> gens;
  for (Elem e : elems)
    if (e != 0)
      gens.push_back(e);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem s : gens) {
      Elem x = g.mul(members[i], s);
      if (!seen[x]) {
        seen[x] = true;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

} // namespace

FiniteGroup FiniteGroup::from_table(std::string name, const std::vector<std::vector<Elem>> &table,
                                    std::size_t cap)
{
  std::size_t n = table.size();
  if (n == 0)
    throw Error(ErrorKind::NonGroup, "empty Cayley table");
  if (n > cap)
    throw Error(ErrorKind::ClosureOverflow, "table order " + std::to_string(n) + " exceeds cap");
  for (const auto &r : table) {
    if (r.size() != n)
      throw Error(ErrorKind::NonGroup, "Cayley table is not square");
    for (Elem x : r)
      if (x >= n)
        throw Error(ErrorKind::NonGroup, "Cayley table entry out of range");
  }

  std::optional<Elem> identity;
  for (Elem e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok)
      identity = e;
  }
  if (!identity)
    throw Error(ErrorKind::NonGroup, "no two-sided identity");

  // relabel: swap the identity with index 0
  std::vector<Elem> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::swap(relabel[0], relabel[*identity]);

  FiniteGroup g;
  g.name_ = std::move(name);
  g.n_ = n;
  g.table_.resize(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      g.table_[relabel[a] * n + relabel[b]] = relabel[table[a][b]];
  g.finish(cap);
  return g;
}

FiniteGroup FiniteGroup::from_permutations(std::string name, std::size_t degree,
                                           const std::vector<Permutation> &generators,
                                           std::size_t cap)
{
  for (const auto &p : generators) {
    if (p.size() != degree)
      throw Error(ErrorKind::InputError, "generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto x : p) {
      if (x >= degree || hit[x])
        throw Error(ErrorKind::InputError, "generator is not a permutation");
      hit[x] = true;
    }
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::map<Permutation, Elem> index{{id, 0}};
  std::vector<Permutation> perms{id};
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (const auto &s : generators) {
      Permutation x = compose(perms[i], s);
      if (index.emplace(x, static_cast<Elem>(perms.size())).second) {
        perms.push_back(std::move(x));
        if (perms.size() > cap)
          throw Error(ErrorKind::ClosureOverflow,
                      "closure of " + name + " exceeds order cap " + std::to_string(cap));
      }
    }
  }

  FiniteGroup g;
  g.name_ = std::move(name);
  g.n_ = perms.size();
  g.degree_ = degree;
  g.table_.resize(g.n_ * g.n_);
  for (std::size_t a = 0; a < g.n_; ++a)
    for (std::size_t b = 0; b < g.n_; ++b)
      g.table_[a * g.n_ + b] = index.at(compose(perms[a], perms[b]));
  g.perms_ = std::move(perms);
  g.finish(cap);
  return g;
}

void FiniteGroup::finish(std::size_t cap)
{
  if (n_ > cap)
    throw Error(ErrorKind::ClosureOverflow, "order exceeds cap");

  inv_.assign(n_, 0);
  for (Elem a = 0; a < n_; ++a) {
    std::vector<bool> seen(n_, false);
    std::optional<Elem> inverse;
    for (Elem b = 0; b < n_; ++b) {
      Elem x = mul(a, b);
      if (seen[x])
        throw Error(ErrorKind::NonGroup, "row " + std::to_string(a) + " is not a permutation");
      seen[x] = true;
      if (x == 0)
        inverse = b;
    }
    if (!inverse || mul(*inverse, a) != 0)
      throw Error(ErrorKind::NonGroup, "element " + std::to_string(a) + " has no two-sided inverse");
    inv_[a] = *inverse;
  }
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      for (Elem c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error(ErrorKind::NonGroup, "table is not associative");

  orders_.assign(n_, 1);
  for (Elem a = 0; a < n_; ++a) {
    Elem x = a;
    while (x != 0) {
      x = mul(x, a);
      ++orders_[a];
    }
  }

  // greedy generating set
  generators_.clear();
  std::vector<Elem> span{0};
  while (span.size() < n_) {
    Elem next = 0;
    for (Elem a = 1; a < n_; ++a)
      if (!std::binary_search(span.begin(), span.end(), a)) {
        next = a;
        break;
      }
    generators_.push_back(next);
    span = close_under_products(*this, generators_);
  }
}

Elem FiniteGroup::pow(Elem g, std::int64_t e) const
{
  auto o = static_cast<std::int64_t>(orders_[g]);
  e %= o;
  if (e < 0)
    e += o;
  Elem r = 0;
  for (std::int64_t i = 0; i < e; ++i)
    r = mul(r, g);
  return r;
}

std::optional<Elem> FiniteGroup::find_permutation(const Permutation &perm) const
{
  for (Elem g = 0; g < perms_.size(); ++g)
    if (perms_[g] == perm)
      return g;
  return std::nullopt;
}

std::string FiniteGroup::label(Elem g) const
{
  if (perms_.empty())
    return "g" + std::to_string(g);
  const auto &p = perms_[g];
  std::ostringstream out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i)
      continue;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      out << (first ? "" : " ") << j;
      first = false;
      j = p[j];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> members)
  : parent_(std::move(parent)), members_(std::move(members)), mask_(parent_->order(), false)
{
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Elem g : members_)
    mask_[g] = true;
}

std::vector<Elem> Subgroup::generators() const
{
  std::vector<Elem> gens;
  std::vector<Elem> span{0};
  for (Elem g : members_) {
    if (std::binary_search(span.begin(), span.end(), g))
      continue;
    gens.push_back(g);
    span = close_under_products(*parent_, gens);
  }
  return gens;
}

GroupPtr load_group(const nlohmann::json &spec, std::size_t cap)
{
  try {
    std::string name = spec.value("name", std::string("G"));
    std::string kind = spec.value("kind", std::string("perm"));
    if (kind == "table") {
      auto table = spec.at("cayley").get<std::vector<std::vector<Elem>>>();
      return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(name, table, cap));
    }
    if (kind == "perm") {
      auto gens = spec.value("generators", std::vector<Permutation>{});
      std::size_t degree = spec.value("degree", gens.empty() ? std::size_t{0} : gens.front().size());
      return std::make_shared<const FiniteGroup>(
        FiniteGroup::from_permutations(name, degree, gens, cap));
    }
    throw Error(ErrorKind::InputError, "unknown group kind '" + kind + "'");
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorKind::InputError, std::string("malformed group spec: ") + e.what());
  }
}

Subgroup whole_group(const GroupPtr &g)
{
  std::vector<Elem> all(g->order());
  std::iota(all.begin(), all.end(), 0u);
  return Subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const GroupPtr &g) { return Subgroup(g, {0}); }

Subgroup generated_subgroup(const GroupPtr &g, std::span<const Elem> elems)
{
  return Subgroup(g, close_under_products(*g, elems));
}

bool is_normal(const Subgroup &h)
{
  const auto &g = *h.parent();
  for (Elem x : g.generators())
    for (Elem m : h.members())
      if (!h.contains(g.conj(m, x)))
        return false;
  return true;
}

bool is_p_group(const Subgroup &h, unsigned p) { return is_p_power(h.order(), p); }

Subgroup centralizer(const GroupPtr &g, std::span<const Elem> set)
{
  std::vector<Elem> members;
  for (Elem x = 0; x < g->order(); ++x) {
    bool ok = std::all_of(set.begin(), set.end(),
                          [&](Elem s) { return g->mul(s, x) == g->mul(x, s); });
    if (ok)
      members.push_back(x);
  }
  return Subgroup(g, std::move(members));
}

Subgroup normalizer(const Subgroup &h)
{
  const auto &g = h.parent();
  auto gens = h.generators();
  std::vector<Elem> members;
  for (Elem x = 0; x < g->order(); ++x) {
    bool ok = std::all_of(gens.begin(), gens.end(), [&](Elem s) { return h.contains(g->conj(s, x)); });
    if (ok)
      members.push_back(x);
  }
  return Subgroup(g, std::move(members));
}

Subgroup center(const GroupPtr &g) { return centralizer(g, g->generators()); }

Subgroup intersection(const Subgroup &a, const Subgroup &b)
{
  std::vector<Elem> members;
  for (Elem x : a.members())
    if (b.contains(x))
      members.push_back(x);
  return Subgroup(a.parent(), std::move(members));
}

Subgroup conjugate_subgroup(const Subgroup &h, Elem x)
{
  std::vector<Elem> members;
  members.reserve(h.order());
  for (Elem m : h.members())
    members.push_back(h.parent()->conj(m, x));
  return Subgroup(h.parent(), std::move(members));
}

Subgroup sylow_containing(const Subgroup &start, unsigned p)
{
  const auto &g = start.parent();
  if (!is_p_group(start, p))
    throw Error(ErrorKind::InputError, "starting subgroup is not a p-group");
  std::uint64_t target = p_part(g->order(), p);
  Subgroup h = start;
  while (h.order() < target) {
    // A proper p-subgroup has p | [N_G(H):H]; adjoin an element of order p mod H.
    Subgroup nh = normalizer(h);
    std::optional<Elem> step;
    for (Elem x : nh.members()) {
      if (h.contains(x))
        continue;
      if (h.contains(g->pow(x, p))) {
        step = x;
        break;
      }
    }
    if (!step)
      throw Error(ErrorKind::InputError, "Sylow extension failed (not reachable for a valid group)");
    std::vector<Elem> gens = h.generators();
    gens.push_back(*step);
    h = generated_subgroup(g, gens);
  }
  return h;
}

Subgroup sylow_p(const GroupPtr &g, unsigned p) { return sylow_containing(trivial_subgroup(g), p); }

Subgroup o_p(const GroupPtr &g, unsigned p)
{
  Subgroup s = sylow_p(g, p);
  Subgroup core = s;
  for (Elem x = 0; x < g->order(); ++x)
    core = intersection(core, conjugate_subgroup(s, x));
  return core;
}

Admissibility is_admissible(const GroupPtr &g, unsigned p)
{
  Subgroup n = o_p(g, p);
  Subgroup c = centralizer(g, n.members());
  for (Elem x : c.members())
    if (!n.contains(x))
      return {false, n, x};
  return {true, n, std::nullopt};
}

std::vector<Elem> n_class_orbit(const Subgroup &n, Elem g)
{
  if (!is_normal(n))
    throw Error(ErrorKind::NotNormal, "orbit requires a normal subgroup");
  std::vector<Elem> orbit;
  orbit.reserve(n.order());
  for (Elem x : n.members())
    orbit.push_back(n.parent()->conj(g, x));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

SpecialSets special_sets(const GroupPtr &g, unsigned p)
{
  SpecialSets s;
  for (Elem x = 0; x < g->order(); ++x) {
    if (g->element_order(x) == 2)
      s.involutions.push_back(x);
    if (g->element_order(x) % p != 0)
      s.p_prime_elements.push_back(x);
  }
  return s;
}

QuotientMap quotient_by(const Subgroup &k)
{
  if (!is_normal(k))
    throw Error(ErrorKind::NotNormal, "quotient requires a normal subgroup");
  const auto &g = k.parent();
  std::size_t n = g->order();
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> proj(n, unset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (proj[x] != unset)
      continue;
    auto idx = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : k.members())
      proj[g->mul(x, m)] = idx;
  }
  std::vector<std::vector<Elem>> table(reps.size(), std::vector<Elem>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b)
      table[a][b] = proj[g->mul(reps[a], reps[b])];
  auto q = std::make_shared<const FiniteGroup>(
    FiniteGroup::from_table(g->name() + "/" + std::to_string(k.order()), table, n));
  return {g, k, q, std::move(proj)};
}

} // namespace pblock
