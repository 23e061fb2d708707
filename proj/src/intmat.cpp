#include "dimod/intmat.hpp"

#include <algorithm>

namespace dimod {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IVec>& rs, int ncols) {
  IntMat m(int(rs.size()), ncols);
  for (size_t i = 0; i < rs.size(); ++i) {
    check(int(rs[i].size()) == ncols, ErrorCode::InvariantViolation, "from_rows: ragged input");
    for (int j = 0; j < ncols; ++j) m.at(int(i), j) = rs[i][j];
  }
  return m;
}

IVec IntMat::row(int r) const {
  IVec v(cols);
  for (int j = 0; j < cols; ++j) v[j] = at(r, j);
  return v;
}

IVec IntMat::col(int c) const {
  IVec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, c);
  return v;
}

IntMat IntMat::mul(const IntMat& o) const {
  check(cols == o.rows, ErrorCode::InvariantViolation, "mul: shape mismatch");
  IntMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

IVec IntMat::mul_vec(const IVec& x) const {
  check(int(x.size()) == cols, ErrorCode::InvariantViolation, "mul_vec: shape mismatch");
  IVec r(rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r[i] += at(i, j) * x[j];
  return r;
}

IVec IntMat::vec_mul(const IVec& x) const {
  check(int(x.size()) == rows, ErrorCode::InvariantViolation, "vec_mul: shape mismatch");
  IVec r(cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) r[j] += x[i] * at(i, j);
  return r;
}

IntMat IntMat::transposed() const {
  IntMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

namespace {

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

struct SnfWork {
  IntMat S, U, V;

  void row_swap(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < S.cols; ++c) std::swap(S.at(i, c), S.at(j, c));
    for (int c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
  }
  void col_swap(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < S.rows; ++r) std::swap(S.at(r, i), S.at(r, j));
    for (int r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
  }
  // row i += q * row j
  void row_axpy(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < S.cols; ++c) S.at(i, c) += q * S.at(j, c);
    for (int c = 0; c < U.cols; ++c) U.at(i, c) += q * U.at(j, c);
  }
  // col i += q * col j
  void col_axpy(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < S.rows; ++r) S.at(r, i) += q * S.at(r, j);
    for (int r = 0; r < V.rows; ++r) V.at(r, i) += q * V.at(r, j);
  }
  void row_negate(int i) {
    for (int c = 0; c < S.cols; ++c) S.at(i, c) = -S.at(i, c);
    for (int c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& M) {
  SnfWork w;
  w.S = M;
  w.U = IntMat::identity(M.rows);
  w.V = IntMat::identity(M.cols);
  int n = std::min(M.rows, M.cols);
  int t = 0;
  long guard = 0;
  while (t < n) {
    // pick the nonzero entry of smallest magnitude in the active submatrix
    int pi = -1, pj = -1;
    for (int i = t; i < M.rows; ++i)
      for (int j = t; j < M.cols; ++j)
        if (w.S.at(i, j) != 0 &&
            (pi < 0 || iabs(w.S.at(i, j)) < iabs(w.S.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    bool again = false;
    for (int i = t + 1; i < M.rows; ++i) {
      if (w.S.at(i, t) == 0) continue;
      Int q = w.S.at(i, t) / w.S.at(t, t);
      w.row_axpy(i, t, -q);
      if (w.S.at(i, t) != 0) again = true;
    }
    for (int j = t + 1; j < M.cols; ++j) {
      if (w.S.at(t, j) == 0) continue;
      Int q = w.S.at(t, j) / w.S.at(t, t);
      w.col_axpy(j, t, -q);
      if (w.S.at(t, j) != 0) again = true;
    }
    check(++guard < 100000, ErrorCode::InvariantViolation, "snf: no convergence");
    if (again) continue;

    // pivot must divide the rest of the submatrix
    bool fixed = false;
    for (int i = t + 1; i < M.rows && !fixed; ++i)
      for (int j = t + 1; j < M.cols && !fixed; ++j)
        if (w.S.at(i, j) % w.S.at(t, t) != 0) {
          w.row_axpy(t, i, 1);
          fixed = true;
        }
    if (fixed) continue;

    if (w.S.at(t, t) < 0) w.row_negate(t);
    ++t;
  }

  SmithResult r;
  r.U = w.U;
  r.S = w.S;
  r.V = w.V;
  r.rank = t;
  for (int i = 0; i < n; ++i) r.diag.push_back(w.S.at(i, i));
  return r;
}

int rank_of(const IntMat& M) { return smith_normal_form(M).rank; }

std::vector<IVec> kernel_basis(const IntMat& M) {
  if (M.cols == 0) return {};
  if (M.rows == 0) {
    std::vector<IVec> basis;
    for (int j = 0; j < M.cols; ++j) {
      IVec e(M.cols);
      e[j] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  SmithResult s = smith_normal_form(M);
  std::vector<IVec> basis;
  for (int j = s.rank; j < M.cols; ++j) basis.push_back(s.V.col(j));
  return basis;
}

std::optional<IVec> solve_integer(const IntMat& A, const IVec& b) {
  check(int(b.size()) == A.rows, ErrorCode::InvariantViolation, "solve: shape mismatch");
  SmithResult s = smith_normal_form(A);
  IVec ub = s.U.mul_vec(b);
  IVec z(A.cols);
  for (int i = 0; i < A.rows; ++i) {
    if (i < s.rank) {
      if (ub[i] % s.diag[i] != 0) return std::nullopt;
      z[i] = ub[i] / s.diag[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V.mul_vec(z);
}

IntMat inverse_unimodular(const IntMat& U) {
  check(U.rows == U.cols, ErrorCode::InvariantViolation, "inverse: not square");
  SmithResult s = smith_normal_form(U);
  for (const Int& d : s.diag)
    check(d == 1, ErrorCode::InvariantViolation, "inverse: matrix not unimodular");
  // Us * U * Vs = I  =>  U^{-1} = Vs * Us
  return s.V.mul(s.U);
}

Lattice Lattice::from_rows(const std::vector<IVec>& gens, int dim) {
  Lattice L;
  L.dim = dim;
  std::vector<IVec> work;
  for (const IVec& g : gens) {
    check(int(g.size()) == dim, ErrorCode::InvariantViolation, "lattice: ragged input");
    if (!ivec_is_zero(g)) work.push_back(g);
  }
  size_t r = 0;
  for (int col = 0; col < dim && r < work.size(); ++col) {
    while (true) {
      int best = -1;
      for (size_t i = r; i < work.size(); ++i)
        if (work[i][col] != 0 &&
            (best < 0 || iabs(work[i][col]) < iabs(work[best][col])))
          best = int(i);
      if (best < 0) break;
      std::swap(work[r], work[size_t(best)]);
      bool nonzero_left = false;
      for (size_t i = r + 1; i < work.size(); ++i) {
        if (work[i][col] == 0) continue;
        Int q = work[i][col] / work[r][col];
        ivec_axpy(work[i], -q, work[r]);
        if (work[i][col] != 0) nonzero_left = true;
      }
      if (!nonzero_left) break;
    }
    if (r < work.size() && work[r][col] != 0) {
      if (work[r][col] < 0)
        for (Int& x : work[r]) x = -x;
      L.pivot_col.push_back(col);
      ++r;
    }
  }
  work.resize(r);
  // reduce entries above each pivot into [0, pivot)
  for (size_t k = 0; k < work.size(); ++k) {
    int col = L.pivot_col[k];
    for (size_t i = 0; i < k; ++i) {
      Int q = floor_div(work[i][col], work[k][col]);
      ivec_axpy(work[i], -q, work[k]);
    }
  }
  L.rows = work;
  return L;
}

bool Lattice::contains(const IVec& v) const { return ivec_is_zero(reduce(v)); }

IVec Lattice::reduce(IVec v) const {
  check(int(v.size()) == dim, ErrorCode::InvariantViolation, "lattice reduce: size");
  for (size_t k = 0; k < rows.size(); ++k) {
    int col = pivot_col[k];
    Int q = floor_div(v[col], rows[k][col]);
    ivec_axpy(v, -q, rows[k]);
  }
  return v;
}

Lattice Lattice::saturation() const {
  if (rows.empty()) return *this;
  std::vector<IVec> orth = kernel_basis(IntMat::from_rows(rows, dim));
  if (orth.empty()) {
    // full rank: saturation is all of Z^dim
    std::vector<IVec> id;
    for (int j = 0; j < dim; ++j) {
      IVec e(dim);
      e[j] = 1;
      id.push_back(e);
    }
    return Lattice::from_rows(id, dim);
  }
  std::vector<IVec> sat = kernel_basis(IntMat::from_rows(orth, dim));
  return Lattice::from_rows(sat, dim);
}

}  // namespace dimod
