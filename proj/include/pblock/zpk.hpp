#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pblock {

using Residue = std::uint64_t;
using Vector = std::vector<Residue>;

/// The coefficient ring Z/p^k. Moduli are kept below 2^24 so that sums of a
/// few hundred products fit in 64 bits before reduction.
class ZpkContext {
public:
  ZpkContext(unsigned p, unsigned k);

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  Residue modulus() const { return modulus_; }

  Residue reduce(std::int64_t x) const
  {
    auto m = static_cast<std::int64_t>(modulus_);
    x %= m;
    return static_cast<Residue>(x < 0 ? x + m : x);
  }
  Residue add(Residue a, Residue b) const { return (a + b) % modulus_; }
  Residue sub(Residue a, Residue b) const { return (a + modulus_ - b) % modulus_; }
  Residue mul(Residue a, Residue b) const { return (a * b) % modulus_; }
  Residue neg(Residue a) const { return a == 0 ? 0 : modulus_ - a; }

  /// p-adic valuation of a residue; k for zero.
  unsigned valuation(Residue a) const;
  /// p^j as a residue (zero once j >= k).
  Residue power_of_p(unsigned j) const;
  /// Inverse of a unit.
  Residue inverse(Residue unit) const;
  /// For a = p^v * w with w a unit, returns w^-1 (a must be nonzero).
  Residue unit_part_inverse(Residue a) const;

  ZpkContext with_precision(unsigned k) const { return ZpkContext(p_, k); }

  friend bool operator==(const ZpkContext &a, const ZpkContext &b)
  {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }

private:
  unsigned p_;
  unsigned k_;
  Residue modulus_;
};

/// Dense row-major matrix of residues.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix from_rows(std::size_t cols, const std::vector<Vector> &rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Residue &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return Vector(row(r).begin(), row(r).end()); }

  void append_row(std::span<const Residue> r);
  Matrix transposed() const;

  friend bool operator==(const Matrix &a, const Matrix &b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

/// A Z/p^k-submodule of (Z/p^k)^n held in Howell normal form. The form is
/// canonical, so equality of submodules is equality of basis matrices.
///
/// Basis rows are in echelon order by pivot column; each pivot is p^v for the
/// row's pivot valuation v, entries above a pivot p^v lie in [0, p^v), and the
/// Howell property holds: any member whose first j coordinates vanish is a
/// combination of the rows with pivot column >= j.
class Submodule {
public:
  Submodule(const ZpkContext &ctx, std::size_t ambient);

  /// Howell form of the row span of `generators`.
  static Submodule span(const ZpkContext &ctx, const Matrix &generators);
  static Submodule span(const ZpkContext &ctx, std::size_t ambient, const std::vector<Vector> &rows);
  static Submodule full(const ZpkContext &ctx, std::size_t ambient);
  /// m * (Z/p^k)^n
  static Submodule multiple_of_full(const ZpkContext &ctx, std::size_t ambient, Residue m);
  /// Span of the standard basis vectors at `coords`.
  static Submodule coordinate(const ZpkContext &ctx, std::size_t ambient,
                              std::span<const std::uint32_t> coords);

  const ZpkContext &context() const { return ctx_; }
  std::size_t ambient_rank() const { return ambient_; }
  const Matrix &basis() const { return basis_; }
  std::size_t size() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }
  std::size_t pivot_column(std::size_t i) const { return pivots_[i]; }
  unsigned pivot_valuation(std::size_t i) const { return valuations_[i]; }

  /// log_p of the number of elements.
  unsigned log_cardinality() const;

  bool contains(std::span<const Residue> v) const;
  /// Coordinates c with sum_i c_i * basis_i == v, or nullopt for non-members.
  std::optional<Vector> coordinates(std::span<const Residue> v) const;

  bool contains(const Submodule &other) const;

  friend Submodule operator+(const Submodule &a, const Submodule &b);
  friend bool operator==(const Submodule &a, const Submodule &b);

private:
  void check_vector(std::span<const Residue> v) const;

  ZpkContext ctx_;
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
  std::vector<unsigned> valuations_;
};

/// Howell normal form of the row span of M.
Submodule howell_form(const ZpkContext &ctx, const Matrix &m);

Submodule intersect(const Submodule &a, const Submodule &b);

/// Smith decomposition over Z/p^k: U * A * V = diag(p^e_0, ..., p^e_{r-1}, 0...).
struct SmithForm {
  std::vector<unsigned> exponents; ///< e_i < k of the nonzero diagonal entries, nondecreasing
  Matrix left;                     ///< U (rows x rows)
  Matrix right_inverse;            ///< V^-1 (cols x cols)
};
SmithForm smith_form(const ZpkContext &ctx, const Matrix &a);

/// Exponents e_i < k with S ~= (+)_i p^e_i (Z/p^k) as a submodule of a free module.
std::vector<unsigned> elementary_exponents(const Submodule &s);

/// {x : x * A == 0 mod p^k} for an m x n matrix A (row vectors x of length m).
Submodule left_kernel(const ZpkContext &ctx, const Matrix &a);

/// Kernel of an exactly known integer matrix over Z_p, reduced mod p^k: rows of
/// U for the zero diagonal entries of the Smith form. Nonzero elementary
/// divisors are assumed to have valuation below k.
Submodule lattice_left_kernel(const ZpkContext &ctx, const Matrix &a);

struct Solution {
  Vector particular;
  Submodule kernel; ///< {x : A x == 0}
};

/// All x with A x == b (mod p^k), or nullopt.
std::optional<Solution> try_solve(const ZpkContext &ctx, const Matrix &a, std::span<const Residue> b);
/// As try_solve, throwing NoSolution.
Solution solve(const ZpkContext &ctx, const Matrix &a, std::span<const Residue> b);

/// p-saturation: the span of the Smith basis vectors w_i for which p^e_i w_i,
/// e_i < k, generate S. Pure submodules (all e_i == 0) are returned unchanged.
/// When some e_i > 0 the result is only determined modulo p^(k - max e_i);
/// the Smith basis computed from the canonical Howell matrix fixes the lift.
Submodule saturate(const Submodule &s);

/// Scalar multiple of a vector, in place.
void scale(const ZpkContext &ctx, std::span<Residue> v, Residue c);
/// v += c * w, in place.
void axpy(const ZpkContext &ctx, std::span<Residue> v, Residue c, std::span<const Residue> w);

} // namespace pblock
