#include "bhc/superalgebra.hpp"

namespace bhc {

SuperAlgebraFD SuperAlgebraFD::zero(std::vector<std::string> names, std::vector<Parity> parity)
{
  SuperAlgebraFD g;
  g.names = std::move(names);
  g.parity = std::move(parity);
  size_t n = g.names.size();
  g.c.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(0))));
  g.alpha = MatrixQ(n, n);
  g.beta = MatrixQ(n, n);
  for (size_t i = 0; i < n; ++i) {
    g.alpha.at(i, i) = 1;
    g.beta.at(i, i) = 1;
  }
  return g;
}

bool SuperAlgebraFD::maps_even() const
{
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j)
      if (parity[i] != parity[j] && (!is_zero(alpha.at(j, i)) || !is_zero(beta.at(j, i))))
        return false;
  return true;
}

bool SuperAlgebraFD::maps_commute() const
{
  size_t n = dim();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      Scalar ab(0), ba(0);
      for (size_t k = 0; k < n; ++k) {
        ab += alpha.at(i, k) * beta.at(k, j);
        ba += beta.at(i, k) * alpha.at(k, j);
      }
      if (ab != ba) return false;
    }
  }
  return true;
}

bool SuperAlgebraFD::is_supercommutative() const
{
  size_t n = dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        Scalar rhs = c[j][i][k];
        if (parity_sign(parity[i], parity[j]) < 0) rhs = -rhs;
        if (c[i][j][k] != rhs) return false;
      }
  return true;
}

bool SuperAlgebraFD::is_associative() const
{
  size_t n = dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        for (size_t t = 0; t < n; ++t) {
          Scalar lhs(0), rhs(0);
          for (size_t m = 0; m < n; ++m) {
            lhs += c[i][j][m] * c[m][k][t];
            rhs += c[j][k][m] * c[i][m][t];
          }
          if (lhs != rhs) return false;
        }
  return true;
}

} // namespace bhc
