#ifndef BHC_ENDOMAP_HPP
#define BHC_ENDOMAP_HPP

#include "bhc/element.hpp"
#include "bhc/linalg.hpp"

#include <optional>

namespace bhc {

// Even endomorphism of a free Q[d]-module, as a matrix over Q[d] on the
// basis (column i = image of generator i).  Because the entries act by
// multiplication, every EndoMap commutes with d automatically.
struct EndoMap {
  MatrixP m;

  EndoMap() = default;
  explicit EndoMap(MatrixP mm) : m(std::move(mm)) {}
  static EndoMap identity(size_t n) { return EndoMap(identity_p(n)); }

  size_t rank() const { return m.size(); }
  bool is_identity() const;

  Element apply(const Element& e) const;
  LValue apply(const LValue& v) const;
  Element column(size_t i) const;

  EndoMap compose(const EndoMap& o) const { return EndoMap(mul(m, o.m)); }
  EndoMap power(int k) const;
  bool commutes_with(const EndoMap& o) const;
  bool operator==(const EndoMap& o) const { return m == o.m; }

  // Preserves the grading: column i supported on generators of parity
  // equal to that of generator i.
  bool is_even(const std::vector<Parity>& parities) const;
  // Off-parity part of column i (zero when even).
  Element odd_part_of_column(size_t i, const std::vector<Parity>& parities) const;

  bool is_regular() const; // det a nonzero rational
  std::optional<EndoMap> inverse() const;
};

} // namespace bhc

#endif
