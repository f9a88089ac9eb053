#include "bhc/ansatz.hpp"

#include <stdexcept>

namespace bhc {

EquationCollector::EquationCollector(std::vector<SymId> params) : params_(std::move(params))
{
  for (size_t i = 0; i < params_.size(); ++i) index_[params_[i]] = i;
}

void EquationCollector::add(const Poly& residual)
{
  // group the terms of the residual by their parameter-free base monomial
  std::map<Monomial, std::pair<VectorQ, Scalar>> eqs;
  residual.for_each([&](const Monomial& m, const Scalar& c) {
    SymId param = -1;
    Monomial base = m;
    for (size_t i = kParamBase; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (m[i] > 1 || param != -1)
        throw std::invalid_argument("EquationCollector: residual not linear in parameters");
      param = static_cast<SymId>(i);
      base[i] = 0;
    }
    while (!base.empty() && base.back() == 0) base.pop_back();
    auto& eq = eqs[base];
    if (eq.first.empty()) eq.first.assign(params_.size(), Scalar(0));
    if (param == -1) {
      eq.second += c;
    } else {
      auto it = index_.find(param);
      if (it == index_.end())
        throw std::invalid_argument("EquationCollector: unknown parameter symbol");
      eq.first[it->second] += c;
    }
  });
  for (auto& [base, eq] : eqs) {
    rows_.push_back(std::move(eq.first));
    consts_.push_back(eq.second);
  }
}

std::vector<VectorQ> EquationCollector::kernel() const
{
  for (const auto& c : consts_)
    if (!is_zero(c))
      throw std::invalid_argument("EquationCollector::kernel: system is not homogeneous");
  MatrixQ m(rows_.size(), params_.size());
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t j = 0; j < params_.size(); ++j) m.at(i, j) = rows_[i][j];
  return rref_kernel(m).basis;
}

std::optional<AffineSolution> EquationCollector::solve() const
{
  MatrixQ m(rows_.size(), params_.size());
  VectorQ rhs(rows_.size());
  for (size_t i = 0; i < rows_.size(); ++i) {
    for (size_t j = 0; j < params_.size(); ++j) m.at(i, j) = rows_[i][j];
    rhs[i] = -consts_[i];
  }
  return solve_affine(m, rhs);
}

Poly param_combination(const std::vector<Poly>& values, ParamPool& pool)
{
  Poly r;
  for (const auto& v : values) r += Poly::var(pool.fresh()) * v;
  return r;
}

Poly instantiate(const Poly& p, const std::vector<SymId>& params, const VectorQ& values)
{
  std::map<SymId, Poly> subs;
  for (size_t i = 0; i < params.size(); ++i) subs.emplace(params[i], Poly(values[i]));
  return p.substitute_many(subs);
}

} // namespace bhc
