#ifndef BHC_LINALG_HPP
#define BHC_LINALG_HPP

#include "bhc/poly.hpp"
#include "bhc/scalar.hpp"

#include <optional>
#include <vector>

namespace bhc {

using VectorQ = std::vector<Scalar>;

// Dense exact-rational matrix.
class MatrixQ {
public:
  MatrixQ() = default;
  MatrixQ(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  void append_row(const VectorQ& row);

private:
  size_t rows_ = 0, cols_ = 0;
  VectorQ a_;
};

struct RrefResult {
  size_t rank = 0;
  std::vector<size_t> pivot_cols;
  MatrixQ reduced;
};

RrefResult rref(const MatrixQ& m);

struct KernelResult {
  std::vector<VectorQ> basis;
  size_t rank = 0;
};

// Exact nullspace basis; rank + basis.size() == column count.
KernelResult rref_kernel(const MatrixQ& m);

struct AffineSolution {
  VectorQ particular;
  std::vector<VectorQ> kernel;
};

// Solves m*x = rhs exactly; nullopt iff the system is inconsistent.
std::optional<AffineSolution> solve_affine(const MatrixQ& m, const VectorQ& rhs);

// Matrix over Q[d] (or Q[d, x...] for conformal maps).
using MatrixP = std::vector<std::vector<Poly>>;

MatrixP identity_p(size_t n);
MatrixP mul(const MatrixP& a, const MatrixP& b);
MatrixP add(const MatrixP& a, const MatrixP& b);
bool is_zero(const MatrixP& a);

// Determinant over Q[d] via fraction-free (Bareiss) elimination.
Poly det_in_d(const MatrixP& m);

// Inverse of a matrix over Q[d] whose determinant is a nonzero rational;
// nullopt otherwise.  (Such matrices are exactly the units of the matrix
// ring over Q[d], i.e. the "regular" structure maps.)
std::optional<MatrixP> inverse_in_d(const MatrixP& m);

} // namespace bhc

#endif
