#include "bhc/report.hpp"

#include <json.hpp>

#include <sstream>

namespace bhc {

bool Report::all_ok() const
{
  for (const auto& v : verdicts)
    if (!v.ok) return false;
  return true;
}

void Report::add_info(std::string key, std::string value)
{
  info.emplace_back(std::move(key), std::move(value));
}

void Report::add_verdict(std::string subject, const CheckReport& rep,
                         std::vector<std::string> names)
{
  Verdict v;
  v.subject = std::move(subject);
  v.ok = rep.ok();
  v.violations = rep.violations;
  v.names = std::move(names);
  verdicts.push_back(std::move(v));
}

void Report::add_output(std::string key, std::string value)
{
  outputs.emplace_back(std::move(key), std::move(value));
}

namespace {

std::string render_where(const std::vector<std::string>& where)
{
  std::string s = "(";
  for (size_t i = 0; i < where.size(); ++i) {
    if (i) s += ", ";
    s += where[i];
  }
  return s + ")";
}

} // namespace

std::string Report::text(int exit_code, double elapsed_ms) const
{
  std::ostringstream os;
  os << "command: " << command << "\n";
  for (const auto& [k, v] : info) os << k << ": " << v << "\n";
  for (const auto& v : verdicts) {
    if (v.ok) {
      os << v.subject << ": ok\n";
    } else {
      os << v.subject << ": " << v.violations.size() << " violation"
         << (v.violations.size() == 1 ? "" : "s") << "\n";
      for (const auto& viol : v.violations)
        os << "  " << viol.axiom << " at " << render_where(viol.where)
           << ": residual = " << render_lvalue(viol.residual, v.names) << "\n";
    }
  }
  for (const auto& [k, v] : outputs) {
    os << k << ":\n";
    std::istringstream lines(v);
    std::string line;
    while (std::getline(lines, line)) os << "  " << line << "\n";
  }
  os << "exit: " << exit_code << "\n";
  os << "time_ms: " << static_cast<long>(elapsed_ms) << "\n";
  return os.str();
}

std::string Report::json(int exit_code) const
{
  nlohmann::ordered_json j;
  j["schema"] = "bhc.report/1";
  j["command"] = command;
  nlohmann::ordered_json ji = nlohmann::ordered_json::object();
  for (const auto& [k, v] : info) ji[k] = v;
  j["info"] = ji;
  nlohmann::ordered_json jv = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) {
    nlohmann::ordered_json item;
    item["subject"] = v.subject;
    item["ok"] = v.ok;
    nlohmann::ordered_json viols = nlohmann::ordered_json::array();
    for (const auto& viol : v.violations) {
      nlohmann::ordered_json jv2;
      jv2["axiom"] = viol.axiom;
      jv2["at"] = viol.where;
      jv2["residual"] = render_lvalue(viol.residual, v.names);
      viols.push_back(jv2);
    }
    item["violations"] = viols;
    jv.push_back(item);
  }
  j["verdicts"] = jv;
  nlohmann::ordered_json jo = nlohmann::ordered_json::object();
  for (const auto& [k, v] : outputs) jo[k] = v;
  j["outputs"] = jo;
  j["exit"] = exit_code;
  return j.dump(2) + "\n";
}

} // namespace bhc
