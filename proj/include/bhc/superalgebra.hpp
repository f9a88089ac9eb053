#ifndef BHC_SUPERALGEBRA_HPP
#define BHC_SUPERALGEBRA_HPP

#include "bhc/element.hpp"
#include "bhc/linalg.hpp"

#include <string>
#include <vector>

namespace bhc {

// Finite-dimensional superalgebra datum: scalar structure constants
// c[i][j][k] for x_i * x_j = sum_k c[i][j][k] x_k (a bracket or an
// associative product, depending on use) plus two even scalar maps.
struct SuperAlgebraFD {
  std::vector<std::string> names;
  std::vector<Parity> parity;
  std::vector<std::vector<std::vector<Scalar>>> c;
  MatrixQ alpha, beta;

  size_t dim() const { return names.size(); }
  static SuperAlgebraFD zero(std::vector<std::string> names, std::vector<Parity> parity);

  std::vector<Scalar> product(size_t i, size_t j) const { return c[i][j]; }
  bool maps_even() const;
  bool maps_commute() const;
  // x_i x_j = (-1)^{|i||j|} x_j x_i for all pairs.
  bool is_supercommutative() const;
  // (x_i x_j) x_k = x_i (x_j x_k) for all triples.
  bool is_associative() const;
};

// Finite representation of a SuperAlgebraFD on a graded space: one scalar
// action matrix per algebra generator, with intertwining maps phi, psi.
struct SuperRep {
  std::vector<std::string> names;
  std::vector<Parity> parity;
  std::vector<MatrixQ> rho;
  MatrixQ phi, psi;

  size_t dim() const { return names.size(); }
};

} // namespace bhc

#endif
