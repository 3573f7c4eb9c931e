#include "borelreg/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace borelreg::cli {

bool Report::has_disagreement() const {
  return std::any_of(agreements.begin(), agreements.end(), [](const Agreement& a) { return !a.equal; });
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json out;
  out["command"] = report.command;
  out["input"] = report.input;
  out["ambient"] = report.ambient;
  out["results"] = nlohmann::json::array();
  for (const auto& r : report.results) {
    nlohmann::json item{{"method", r.method}, {"value", r.value}};
    if (!r.witnesses.is_null()) item["witnesses"] = r.witnesses;
    out["results"].push_back(std::move(item));
  }
  out["agreements"] = nlohmann::json::array();
  for (const auto& a : report.agreements)
    out["agreements"].push_back({{"a", a.a}, {"b", a.b}, {"equal", a.equal}});
  out["discrepancy_notes"] = report.discrepancy_notes;
  return out;
}

namespace {

std::string scalar(const nlohmann::json& v) {
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + scalar(v[k]);
    return out + "]";
  }
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_object()) {
    std::string out;
    for (const auto& [key, item] : v.items()) {
      if (!out.empty()) out += "  ";
      out += key + "=" + scalar(item);
    }
    return out;
  }
  return v.dump();
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "command   " << report.command << '\n';
  out << "input     " << report.input << '\n';
  out << "ambient   " << report.ambient << '\n';

  std::size_t width = 6;
  for (const auto& r : report.results) width = std::max(width, r.method.size());
  out << '\n' << pad("method", width) << "  value\n";
  for (const auto& r : report.results) {
    out << pad(r.method, width) << "  ";
    if (r.value.is_array()) {
      out << "[";
      for (std::size_t k = 0; k < r.value.size(); ++k) out << (k ? ", " : "") << scalar(r.value[k]);
      out << "]";
    } else {
      out << scalar(r.value);
    }
    out << '\n';
  }
  for (const auto& r : report.results) {
    if (r.witnesses.is_null()) continue;
    out << '\n' << r.method << " witnesses\n";
    if (r.witnesses.is_object()) {
      for (const auto& [key, v] : r.witnesses.items()) out << "  " << key << ": " << scalar(v) << '\n';
    } else if (r.witnesses.is_array()) {
      for (const auto& v : r.witnesses) out << "  " << scalar(v) << '\n';
    } else {
      out << "  " << scalar(r.witnesses) << '\n';
    }
  }
  if (!report.agreements.empty()) {
    out << "\nagreements\n";
    for (const auto& a : report.agreements)
      out << "  " << a.a << " = " << a.b << "  " << (a.equal ? "yes" : "NO") << '\n';
  }
  if (!report.discrepancy_notes.empty()) {
    out << "\nnotes\n";
    for (const auto& n : report.discrepancy_notes) out << "  - " << n << '\n';
  }
  return out.str();
}

nlohmann::json error_json(const std::string& command, const std::string& input,
                          const std::string& kind, const std::string& message, int exit_code) {
  return {{"command", command},
          {"input", input},
          {"error", {{"kind", kind}, {"message", message}}},
          {"exit_code", exit_code}};
}

}  // namespace borelreg::cli
