#include "lacunary/report.hpp"

#include <algorithm>
#include <ostream>

namespace lacunary {

namespace {

Json witness_with_reason(const BoundOutcome& o) {
  if (o.applicable) return o.witness;
  Json w = o.witness;
  w["reason"] = o.reason;
  return w;
}

}  // namespace

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_outcomes_csv(std::ostream& out, const std::vector<BoundOutcome>& outcomes) {
  out << "method,d,applicable,value,witness\n";
  for (const BoundOutcome& o : outcomes) {
    out << o.method << ',' << (o.d ? std::to_string(*o.d) : "") << ','
        << (o.applicable ? "true" : "false") << ',' << (o.value ? std::to_string(*o.value) : "")
        << ',' << csv_cell(witness_with_reason(o).dump()) << '\n';
  }
}

void write_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

void write_outcomes_table(std::ostream& out, const std::vector<BoundOutcome>& outcomes) {
  std::vector<std::vector<std::string>> rows = {{"method", "d", "value", "detail"}};
  for (const BoundOutcome& o : outcomes) {
    rows.push_back({o.method, o.d ? std::to_string(*o.d) : "-",
                    o.value ? std::to_string(*o.value) : "n/a",
                    o.applicable ? o.witness.dump() : o.reason});
  }
  write_table(out, rows);
}

Json outcome_json(const BoundOutcome& o) {
  Json j{{"method", o.method},
         {"d", o.d ? Json(*o.d) : Json(nullptr)},
         {"applicable", o.applicable},
         {"value", o.value ? Json(*o.value) : Json(nullptr)}};
  if (o.real_value) j["real_value"] = *o.real_value;
  if (!o.applicable) j["reason"] = o.reason;
  j["witness"] = o.witness;
  return j;
}

Json outcomes_json(const std::vector<BoundOutcome>& outcomes) {
  Json arr = Json::array();
  for (const BoundOutcome& o : outcomes) arr.push_back(outcome_json(o));
  return arr;
}

std::string join_roots(const Field& field, const RootReport& roots) {
  std::string out;
  for (Element r : roots.roots) {
    if (!out.empty()) out += ';';
    out += field.format(r);
  }
  return out;
}

void write_roots_csv(std::ostream& out, const SparsePoly& f, const RootReport& roots) {
  out << "q,poly,count,roots\n";
  out << f.field().q() << ',' << csv_cell(render(f)) << ',' << roots.count() << ','
      << csv_cell(join_roots(f.field(), roots)) << '\n';
}

}  // namespace lacunary
