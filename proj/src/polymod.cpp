#include "bhc/polymod.hpp"

#include <stdexcept>

namespace bhc {

namespace {

void axpy(PolyModVector& dst, const Poly& q, const PolyModVector& src)
{
  for (size_t i = 0; i < dst.size(); ++i) dst[i] -= q * src[i];
}

} // namespace

bool hnf_membership(const std::vector<PolyModVector>& gens, const PolyModVector& v)
{
  size_t rank = v.size();
  std::vector<PolyModVector> rows;
  for (const auto& g : gens) {
    if (g.size() != rank) throw std::invalid_argument("hnf_membership: rank mismatch");
    rows.push_back(g);
  }

  // Triangularize: one pivot row per column, pivot = gcd of the column
  // entries among the remaining rows (Euclid in Q[d]).
  std::vector<std::pair<size_t, PolyModVector>> pivots; // (column, row)
  size_t start = 0;
  for (size_t col = 0; col < rank && start < rows.size(); ++col) {
    while (true) {
      size_t best = rows.size();
      int best_deg = 0;
      for (size_t i = start; i < rows.size(); ++i) {
        if (rows[i][col].is_zero()) continue;
        int deg = rows[i][col].degree_in(sym_d);
        if (best == rows.size() || deg < best_deg) {
          best = i;
          best_deg = deg;
        }
      }
      if (best == rows.size()) break; // column exhausted
      std::swap(rows[start], rows[best]);
      bool reduced_all = true;
      for (size_t i = start + 1; i < rows.size(); ++i) {
        if (rows[i][col].is_zero()) continue;
        auto [q, r] = divmod_in_d(rows[i][col], rows[start][col]);
        axpy(rows[i], q, rows[start]);
        if (!rows[i][col].is_zero()) reduced_all = false;
      }
      if (reduced_all) {
        pivots.emplace_back(col, rows[start]);
        ++start;
        break;
      }
      // Remainders became the new minimal-degree candidates; iterate.
    }
  }

  // Reduce v against the triangular rows; each pivot division must be
  // exact or v is outside the span.
  PolyModVector w = v;
  for (const auto& [col, row] : pivots) {
    if (w[col].is_zero()) continue;
    auto [q, r] = divmod_in_d(w[col], row[col]);
    if (!r.is_zero()) return false;
    axpy(w, q, row);
  }
  for (const auto& p : w)
    if (!p.is_zero()) return false;
  return true;
}

} // namespace bhc
