#ifndef BHC_ANSATZ_HPP
#define BHC_ANSATZ_HPP

#include "bhc/linalg.hpp"
#include "bhc/poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace bhc {

// Allocates fresh parameter symbols for ansatz coefficients.
class ParamPool {
public:
  SymId fresh()
  {
    SymId s = sym_param(next_++);
    all_.push_back(s);
    return s;
  }
  const std::vector<SymId>& all() const { return all_; }

private:
  int next_ = 1;
  std::vector<SymId> all_;
};

// Collects equations "residual == 0" where each residual polynomial is
// affine-linear in a fixed set of parameter symbols, and turns them into
// an exact rational system.
class EquationCollector {
public:
  explicit EquationCollector(std::vector<SymId> params);

  void add(const Poly& residual);
  template <typename Range> void add_all(const Range& polys)
  {
    for (const auto& p : polys) add(p);
  }

  size_t param_count() const { return params_.size(); }
  // Solutions of the homogeneous part; requires all constant parts zero.
  std::vector<VectorQ> kernel() const;
  // Affine solve A x = -b; nullopt iff inconsistent.
  std::optional<AffineSolution> solve() const;

private:
  std::vector<SymId> params_;
  std::map<SymId, size_t> index_;
  std::vector<VectorQ> rows_;
  VectorQ consts_;
};

// Generic linear combination sum_t c_t * value_t with fresh parameters,
// for symbolic "for all members of the span" identities.
Poly param_combination(const std::vector<Poly>& values, ParamPool& pool);

// Substitutes concrete rational values for the parameters of a poly.
Poly instantiate(const Poly& p, const std::vector<SymId>& params, const VectorQ& values);

} // namespace bhc

#endif
