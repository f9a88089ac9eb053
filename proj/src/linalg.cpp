#include "bhc/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace bhc {

void MatrixQ::append_row(const VectorQ& row)
{
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("append_row: column mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

RrefResult rref(const MatrixQ& m)
{
  RrefResult res;
  res.reduced = m;
  MatrixQ& a = res.reduced;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t piv = r;
    while (piv < a.rows() && is_zero(a.at(piv, c))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    Scalar inv = 1 / a.at(r, c);
    for (size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a.at(i, c))) continue;
      Scalar f = a.at(i, c);
      for (size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

KernelResult rref_kernel(const MatrixQ& m)
{
  RrefResult rr = rref(m);
  KernelResult out;
  out.rank = rr.rank;
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : rr.pivot_cols) is_pivot[c] = true;
  for (size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    VectorQ v(m.cols(), Scalar(0));
    v[c] = Scalar(1);
    for (size_t r = 0; r < rr.rank; ++r) v[rr.pivot_cols[r]] = -rr.reduced.at(r, c);
    out.basis.push_back(std::move(v));
  }
  return out;
}

std::optional<AffineSolution> solve_affine(const MatrixQ& m, const VectorQ& rhs)
{
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_affine: dimension mismatch");
  MatrixQ aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  RrefResult rr = rref(aug);
  for (size_t c : rr.pivot_cols)
    if (c == m.cols()) return std::nullopt;
  AffineSolution sol;
  sol.particular.assign(m.cols(), Scalar(0));
  for (size_t r = 0; r < rr.rank; ++r)
    sol.particular[rr.pivot_cols[r]] = rr.reduced.at(r, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : rr.pivot_cols) is_pivot[c] = true;
  for (size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    VectorQ v(m.cols(), Scalar(0));
    v[c] = Scalar(1);
    for (size_t r = 0; r < rr.rank; ++r) v[rr.pivot_cols[r]] = -rr.reduced.at(r, c);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

MatrixP identity_p(size_t n)
{
  MatrixP m(n, std::vector<Poly>(n));
  for (size_t i = 0; i < n; ++i) m[i][i] = Poly(1);
  return m;
}

MatrixP mul(const MatrixP& a, const MatrixP& b)
{
  size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
  MatrixP r(n, std::vector<Poly>(p));
  for (size_t i = 0; i < n; ++i) {
    assert(a[i].size() == k);
    for (size_t j = 0; j < p; ++j) {
      Poly s;
      for (size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
      r[i][j] = std::move(s);
    }
  }
  return r;
}

MatrixP add(const MatrixP& a, const MatrixP& b)
{
  MatrixP r = a;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

bool is_zero(const MatrixP& a)
{
  for (const auto& row : a)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

Poly det_in_d(const MatrixP& m)
{
  size_t n = m.size();
  if (n == 0) return Poly(1);
  MatrixP a = m;
  Poly prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t piv = k + 1;
      while (piv < n && a[piv][k].is_zero()) ++piv;
      if (piv == n) return Poly();
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Poly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto [q, r] = divmod_in_d(num, prev);
        assert(r.is_zero());
        a[i][j] = std::move(q);
      }
      a[i][k] = Poly();
    }
    prev = a[k][k];
  }
  Poly d = a[n - 1][n - 1];
  if (sign < 0) d = -d;
  return d;
}

std::optional<MatrixP> inverse_in_d(const MatrixP& m)
{
  size_t n = m.size();
  Poly d = det_in_d(m);
  if (!d.is_constant() || d.is_zero()) return std::nullopt;
  Scalar inv = 1 / d.constant_term();
  MatrixP r(n, std::vector<Poly>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      MatrixP minor(n - 1, std::vector<Poly>(n - 1));
      for (size_t a = 0, ai = 0; a < n; ++a) {
        if (a == j) continue;
        for (size_t b = 0, bj = 0; b < n; ++b) {
          if (b == i) continue;
          minor[ai][bj] = m[a][b];
          ++bj;
        }
        ++ai;
      }
      Poly cof = det_in_d(minor);
      if (((i + j) & 1u) != 0) cof = -cof;
      r[i][j] = cof * inv;
    }
  }
  return r;
}

} // namespace bhc
