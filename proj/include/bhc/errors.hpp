#ifndef BHC_ERRORS_HPP
#define BHC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bhc {

// A builder refused to run because an input failed one of its stated
// hypotheses.  `identity` names the violated condition.
class HypothesisViolation : public std::runtime_error {
public:
  HypothesisViolation(std::string identity, const std::string& detail)
      : std::runtime_error(identity + ": " + detail), identity_(std::move(identity))
  {
  }
  const std::string& identity() const { return identity_; }

private:
  std::string identity_;
};

} // namespace bhc

#endif
