#pragma once
#include <optional>
#include <vector>

#include "dimod/numeric.hpp"

namespace dimod {

struct IntMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}

  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<IVec>& rs, int ncols);

  Int& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[size_t(r) * cols + c]; }

  IVec row(int r) const;
  IVec col(int c) const;
  IntMat mul(const IntMat& o) const;
  IVec mul_vec(const IVec& x) const;  // M x
  IVec vec_mul(const IVec& x) const;  // x M
  IntMat transposed() const;
  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// U * M * V = S with U, V unimodular, S diagonal, diag entries nonnegative and
// each dividing the next.
struct SmithResult {
  IntMat U, S, V;
  int rank = 0;
  std::vector<Int> diag;  // the min(rows,cols) diagonal entries of S
};

SmithResult smith_normal_form(const IntMat& M);
int rank_of(const IntMat& M);

// Basis of {x : M x = 0}; saturated (a basis of the full kernel sublattice).
std::vector<IVec> kernel_basis(const IntMat& M);

std::optional<IVec> solve_integer(const IntMat& A, const IVec& b);
IntMat inverse_unimodular(const IntMat& U);

// Integer row span in Z^dim, kept in row Hermite normal form: positive pivots,
// entries above a pivot reduced into [0, pivot).
struct Lattice {
  int dim = 0;
  std::vector<IVec> rows;
  std::vector<int> pivot_col;

  static Lattice from_rows(const std::vector<IVec>& gens, int dim);
  int rank() const { return int(rows.size()); }
  bool contains(const IVec& v) const;
  IVec reduce(IVec v) const;  // canonical coset representative
  Lattice saturation() const;
  bool operator==(const Lattice& o) const { return dim == o.dim && rows == o.rows; }
};

}  // namespace dimod
