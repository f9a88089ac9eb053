#ifndef BHC_REPORT_HPP
#define BHC_REPORT_HPP

#include "bhc/algebra.hpp"
#include "bhc/dsl.hpp"

#include <string>
#include <vector>

namespace bhc {

// Deterministic command report: stable ordering, no timestamps in the
// machine format (timing is a text-only trailer).
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> info;

  struct Verdict {
    std::string subject;
    bool ok = true;
    std::vector<Violation> violations;
    std::vector<std::string> names; // basis names for residual rendering
  };
  std::vector<Verdict> verdicts;
  std::vector<std::pair<std::string, std::string>> outputs;

  bool all_ok() const;
  void add_info(std::string key, std::string value);
  void add_verdict(std::string subject, const CheckReport& rep,
                   std::vector<std::string> names);
  void add_output(std::string key, std::string value);

  std::string text(int exit_code, double elapsed_ms) const;
  std::string json(int exit_code) const; // schema-versioned, byte-stable
};

} // namespace bhc

#endif
