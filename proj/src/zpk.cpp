#include "pblock/zpk.hpp"

#include <algorithm>
#include <numeric>

#include "pblock/arith.hpp"
#include "pblock/errors.hpp"

namespace pblock {

ZpkContext::ZpkContext(unsigned p, unsigned k) : p_(p), k_(k), modulus_(1)
{
  if (!is_prime(p))
    throw Error(ErrorKind::InputError, std::to_string(p) + " is not prime");
  if (k < 1)
    throw Error(ErrorKind::InputError, "precision must be at least 1");
  for (unsigned i = 0; i < k; ++i) {
    modulus_ *= p;
    if (modulus_ >= (Residue{1} << 24))
      throw Error(ErrorKind::InputError, "p^k exceeds 2^24");
  }
}

unsigned ZpkContext::valuation(Residue a) const
{
  if (a == 0)
    return k_;
  unsigned v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

Residue ZpkContext::power_of_p(unsigned j) const
{
  if (j >= k_)
    return 0;
  return ipow(p_, j);
}

Residue ZpkContext::inverse(Residue unit) const
{
  auto m = static_cast<std::int64_t>(modulus_);
  std::int64_t a = static_cast<std::int64_t>(unit % modulus_), b = m;
  std::int64_t x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
  }
  if (a != 1)
    throw Error(ErrorKind::NotUnit, std::to_string(unit) + " is not a unit mod " + std::to_string(modulus_));
  return reduce(x0);
}

Residue ZpkContext::unit_part_inverse(Residue a) const
{
  while (a % p_ == 0)
    a /= p_;
  return inverse(a);
}

void scale(const ZpkContext &ctx, std::span<Residue> v, Residue c)
{
  for (auto &x : v)
    x = ctx.mul(x, c);
}

void axpy(const ZpkContext &ctx, std::span<Residue> v, Residue c, std::span<const Residue> w)
{
  if (c == 0)
    return;
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = (v[i] + c * w[i]) % ctx.modulus();
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector> &rows)
{
  Matrix m(0, cols);
  for (const auto &r : rows)
    m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Residue> r)
{
  if (r.size() != cols_)
    throw Error(ErrorKind::DimensionMismatch, "row length does not match matrix width");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix Matrix::transposed() const
{
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t.at(c, r) = at(r, c);
  return t;
}

namespace {

bool is_zero_vector(std::span<const Residue> v)
{
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

struct HowellRows {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
  std::vector<unsigned> valuations;
};

// Howell normal form over the chain ring Z/p^k. Each column is cleared with
// the pool row of least valuation; a pivot p^v with v > 0 contributes its
// annihilator multiple p^(k-v)*row back to the pool, which is what gives the
// Howell property.
HowellRows howell_rows(const ZpkContext &ctx, std::size_t n, std::vector<Vector> pool)
{
  HowellRows out;
  std::erase_if(pool, [](const Vector &r) { return is_zero_vector(r); });
  for (std::size_t col = 0; col < n && !pool.empty(); ++col) {
    std::size_t best = pool.size();
    unsigned best_val = ctx.k();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pool[i][col] == 0)
        continue;
      unsigned v = ctx.valuation(pool[i][col]);
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    if (best == pool.size())
      continue;

    Vector r = std::move(pool[best]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
    scale(ctx, r, ctx.unit_part_inverse(r[col]));
    Residue pivot = r[col]; // == p^best_val

    for (auto &s : pool) {
      if (s[col] == 0)
        continue;
      Residue q = s[col] / pivot;
      axpy(ctx, s, ctx.neg(q), r);
    }
    if (best_val > 0) {
      Vector t = r;
      scale(ctx, t, ctx.power_of_p(ctx.k() - best_val));
      pool.push_back(std::move(t));
    }
    std::erase_if(pool, [](const Vector &v) { return is_zero_vector(v); });

    out.rows.push_back(std::move(r));
    out.pivots.push_back(col);
    out.valuations.push_back(best_val);
  }

  // reduce entries above each pivot into [0, p^v)
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    Residue pivot = ctx.power_of_p(out.valuations[i]);
    std::size_t c = out.pivots[i];
    for (std::size_t j = 0; j < i; ++j) {
      Residue q = out.rows[j][c] / pivot;
      if (q != 0)
        axpy(ctx, out.rows[j], ctx.neg(q), out.rows[i]);
    }
  }
  return out;
}

std::vector<Vector> matrix_rows(const Matrix &m)
{
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    rows.push_back(m.row_vector(r));
  return rows;
}

} // namespace

Submodule::Submodule(const ZpkContext &ctx, std::size_t ambient)
  : ctx_(ctx), ambient_(ambient), basis_(0, ambient)
{}

Submodule Submodule::span(const ZpkContext &ctx, std::size_t ambient, const std::vector<Vector> &rows)
{
  std::vector<Vector> reduced;
  reduced.reserve(rows.size());
  for (const auto &r : rows) {
    if (r.size() != ambient)
      throw Error(ErrorKind::DimensionMismatch, "generator length does not match ambient rank");
    Vector v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
      v[i] = r[i] % ctx.modulus();
    reduced.push_back(std::move(v));
  }
  HowellRows h = howell_rows(ctx, ambient, std::move(reduced));
  Submodule s(ctx, ambient);
  s.basis_ = Matrix::from_rows(ambient, h.rows);
  s.pivots_ = std::move(h.pivots);
  s.valuations_ = std::move(h.valuations);
  return s;
}

Submodule Submodule::span(const ZpkContext &ctx, const Matrix &generators)
{
  return span(ctx, generators.cols(), matrix_rows(generators));
}

Submodule howell_form(const ZpkContext &ctx, const Matrix &m) { return Submodule::span(ctx, m); }

Submodule Submodule::full(const ZpkContext &ctx, std::size_t ambient)
{
  return multiple_of_full(ctx, ambient, 1);
}

Submodule Submodule::multiple_of_full(const ZpkContext &ctx, std::size_t ambient, Residue m)
{
  std::vector<Vector> rows(ambient, Vector(ambient, 0));
  for (std::size_t i = 0; i < ambient; ++i)
    rows[i][i] = m % ctx.modulus();
  return span(ctx, ambient, rows);
}

Submodule Submodule::coordinate(const ZpkContext &ctx, std::size_t ambient,
                                std::span<const std::uint32_t> coords)
{
  std::vector<Vector> rows;
  for (auto c : coords) {
    Vector v(ambient, 0);
    v.at(c) = 1;
    rows.push_back(std::move(v));
  }
  return span(ctx, ambient, rows);
}

unsigned Submodule::log_cardinality() const
{
  unsigned total = 0;
  for (unsigned v : valuations_)
    total += ctx_.k() - v;
  return total;
}

void Submodule::check_vector(std::span<const Residue> v) const
{
  if (v.size() != ambient_)
    throw Error(ErrorKind::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " in ambient rank " +
                  std::to_string(ambient_));
}

std::optional<Vector> Submodule::coordinates(std::span<const Residue> v) const
{
  check_vector(v);
  Vector rest(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    rest[i] = v[i] % ctx_.modulus();
  Vector coords(basis_.rows(), 0);
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    Residue x = rest[pivots_[i]];
    if (x == 0)
      continue;
    Residue pivot = ctx_.power_of_p(valuations_[i]);
    if (x % pivot != 0)
      return std::nullopt;
    coords[i] = x / pivot;
    axpy(ctx_, rest, ctx_.neg(coords[i]), basis_.row(i));
  }
  if (!is_zero_vector(rest))
    return std::nullopt;
  return coords;
}

bool Submodule::contains(std::span<const Residue> v) const { return coordinates(v).has_value(); }

bool Submodule::contains(const Submodule &other) const
{
  if (!(ctx_ == other.ctx_) || ambient_ != other.ambient_)
    throw Error(ErrorKind::ContextMismatch, "submodules live in different modules");
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i)))
      return false;
  return true;
}

Submodule operator+(const Submodule &a, const Submodule &b)
{
  if (!(a.ctx_ == b.ctx_) || a.ambient_ != b.ambient_)
    throw Error(ErrorKind::ContextMismatch, "submodules live in different modules");
  auto rows = matrix_rows(a.basis_);
  auto more = matrix_rows(b.basis_);
  rows.insert(rows.end(), more.begin(), more.end());
  return Submodule::span(a.ctx_, a.ambient_, rows);
}

bool operator==(const Submodule &a, const Submodule &b)
{
  return a.ctx_ == b.ctx_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

Submodule intersect(const Submodule &a, const Submodule &b)
{
  if (!(a.context() == b.context()) || a.ambient_rank() != b.ambient_rank())
    throw Error(ErrorKind::ContextMismatch, "submodules live in different modules");
  const auto &ctx = a.context();
  std::size_t n = a.ambient_rank();
  // rows (x | x) for x in a and (y | 0) for y in b; the rows with vanishing
  // left half carry a ∩ b in their right half.
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vector r(2 * n);
    auto x = a.basis().row(i);
    std::copy(x.begin(), x.end(), r.begin());
    std::copy(x.begin(), x.end(), r.begin() + static_cast<std::ptrdiff_t>(n));
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    Vector r(2 * n, 0);
    auto y = b.basis().row(i);
    std::copy(y.begin(), y.end(), r.begin());
    rows.push_back(std::move(r));
  }
  HowellRows h = howell_rows(ctx, 2 * n, std::move(rows));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < h.rows.size(); ++i)
    if (h.pivots[i] >= n)
      out.emplace_back(h.rows[i].begin() + static_cast<std::ptrdiff_t>(n), h.rows[i].end());
  return Submodule::span(ctx, n, out);
}

SmithForm smith_form(const ZpkContext &ctx, const Matrix &input)
{
  Matrix a = input;
  std::size_t m = a.rows(), n = a.cols();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a.at(i, j) %= ctx.modulus();

  SmithForm out{{}, Matrix(m, m), Matrix(n, n)};
  for (std::size_t i = 0; i < m; ++i)
    out.left.at(i, i) = 1;
  for (std::size_t i = 0; i < n; ++i)
    out.right_inverse.at(i, i) = 1;

  auto swap_rows = [](Matrix &x, std::size_t r1, std::size_t r2) {
    if (r1 == r2)
      return;
    for (std::size_t c = 0; c < x.cols(); ++c)
      std::swap(x.at(r1, c), x.at(r2, c));
  };

  for (std::size_t r = 0; r < std::min(m, n); ++r) {
    std::size_t bi = m, bj = n;
    unsigned best = ctx.k();
    for (std::size_t i = r; i < m && best > 0; ++i)
      for (std::size_t j = r; j < n; ++j) {
        if (a.at(i, j) == 0)
          continue;
        unsigned v = ctx.valuation(a.at(i, j));
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0)
            break;
        }
      }
    if (bi == m)
      break;

    swap_rows(a, r, bi);
    swap_rows(out.left, r, bi);
    if (bj != r) {
      for (std::size_t i = 0; i < m; ++i)
        std::swap(a.at(i, r), a.at(i, bj));
      swap_rows(out.right_inverse, r, bj);
    }

    Residue w = ctx.unit_part_inverse(a.at(r, r));
    scale(ctx, a.row(r), w);
    scale(ctx, out.left.row(r), w);
    Residue pivot = a.at(r, r);

    for (std::size_t i = r + 1; i < m; ++i) {
      if (a.at(i, r) == 0)
        continue;
      Residue q = ctx.neg(a.at(i, r) / pivot);
      axpy(ctx, a.row(i), q, a.row(r));
      axpy(ctx, out.left.row(i), q, out.left.row(r));
    }
    for (std::size_t j = r + 1; j < n; ++j) {
      if (a.at(r, j) == 0)
        continue;
      Residue q = a.at(r, j) / pivot;
      // column j -= q * column r; only row r is nonzero in column r now
      a.at(r, j) = 0;
      axpy(ctx, out.right_inverse.row(r), q, out.right_inverse.row(j));
    }
    out.exponents.push_back(best);
  }
  return out;
}

std::vector<unsigned> elementary_exponents(const Submodule &s)
{
  return smith_form(s.context(), s.basis()).exponents;
}

Submodule left_kernel(const ZpkContext &ctx, const Matrix &a)
{
  std::size_t m = a.rows(), n = a.cols();
  std::vector<Vector> rows;
  rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Vector r(n + m, 0);
    for (std::size_t j = 0; j < n; ++j)
      r[j] = a.at(i, j) % ctx.modulus();
    r[n + i] = 1;
    rows.push_back(std::move(r));
  }
  HowellRows h = howell_rows(ctx, n + m, std::move(rows));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < h.rows.size(); ++i)
    if (h.pivots[i] >= n)
      out.emplace_back(h.rows[i].begin() + static_cast<std::ptrdiff_t>(n), h.rows[i].end());
  return Submodule::span(ctx, m, out);
}

Submodule lattice_left_kernel(const ZpkContext &ctx, const Matrix &a)
{
  SmithForm s = smith_form(ctx, a);
  std::vector<Vector> out;
  for (std::size_t i = s.exponents.size(); i < a.rows(); ++i)
    out.push_back(s.left.row_vector(i));
  return Submodule::span(ctx, a.rows(), out);
}

std::optional<Solution> try_solve(const ZpkContext &ctx, const Matrix &a, std::span<const Residue> b)
{
  std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m)
    throw Error(ErrorKind::DimensionMismatch, "right-hand side length does not match matrix rows");

  // Row t is (column t of A | e_t): every row of the Howell form is (A y | y).
  std::vector<Vector> rows;
  rows.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    Vector r(m + n, 0);
    for (std::size_t i = 0; i < m; ++i)
      r[i] = a.at(i, t) % ctx.modulus();
    r[m + t] = 1;
    rows.push_back(std::move(r));
  }
  HowellRows h = howell_rows(ctx, m + n, std::move(rows));

  Vector rest(m + n, 0);
  for (std::size_t i = 0; i < m; ++i)
    rest[i] = b[i] % ctx.modulus();
  std::vector<Vector> kernel;
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    if (h.pivots[i] >= m) {
      kernel.emplace_back(h.rows[i].begin() + static_cast<std::ptrdiff_t>(m), h.rows[i].end());
      continue;
    }
    Residue x = rest[h.pivots[i]];
    if (x == 0)
      continue;
    Residue pivot = ctx.power_of_p(h.valuations[i]);
    if (x % pivot != 0)
      return std::nullopt;
    axpy(ctx, rest, ctx.neg(x / pivot), h.rows[i]);
  }
  if (!std::all_of(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(m),
                   [](Residue x) { return x == 0; }))
    return std::nullopt;

  Vector particular(n);
  for (std::size_t t = 0; t < n; ++t)
    particular[t] = ctx.neg(rest[m + t]);
  return Solution{std::move(particular), Submodule::span(ctx, n, kernel)};
}

Solution solve(const ZpkContext &ctx, const Matrix &a, std::span<const Residue> b)
{
  auto s = try_solve(ctx, a, b);
  if (!s)
    throw Error(ErrorKind::NoSolution, "linear system has no solution mod p^k");
  return std::move(*s);
}

Submodule saturate(const Submodule &s)
{
  if (s.is_zero())
    return s;
  SmithForm sm = smith_form(s.context(), s.basis());
  if (std::all_of(sm.exponents.begin(), sm.exponents.end(), [](unsigned e) { return e == 0; }))
    return s;
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < sm.exponents.size(); ++i)
    rows.push_back(sm.right_inverse.row_vector(i));
  return Submodule::span(s.context(), s.ambient_rank(), rows);
}

} // namespace pblock
