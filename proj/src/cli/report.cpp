#include <cmath>
#include <cstdio>
#include <sstream>

#include "dyckzeta/cli.hpp"

namespace dyckzeta::cli {

std::string decimal(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  // Round through the 12-digit text so the serialized value has no more.
  return std::stod(decimal(x));
}

Json big_int_json(const BigInt& x) { return x.get_str(); }

Json series_json(const Series& s) {
  Json doc;
  doc["order"] = s.order();
  doc["coefficients"] = s.coefficient_strings();
  return doc;
}

Json entropy_json(const EntropyReport& r) {
  Json doc;
  doc["value"] = number(r.value);
  doc["root"] = number(r.root);
  doc["lo"] = number(r.lo);
  doc["hi"] = number(r.hi);
  doc["residual"] = number(r.residual);
  doc["method"] = to_string(r.method);
  doc["iterations"] = r.iterations;
  doc["at_divergence_frontier"] = r.at_divergence_frontier;
  doc["closed_form"] = r.closed_form ? Json(*r.closed_form) : Json(nullptr);
  return doc;
}

Json bounds_json(const BoundsSummary& b) {
  Json doc;
  doc["rho"] = number(b.rho);
  Json vertices = Json::array();
  for (const auto& v : b.vertices) {
    Json row;
    row["vertex"] = v.vertex;
    row["q_at_rho2"] = v.degenerate ? Json(nullptr) : number(v.q_at_rho2);
    row["branch"] = to_string(v.branch);
    row["applicable"] = v.applicable;
    row["bound"] = v.applicable ? number(v.bound) : Json(nullptr);
    row["degenerate"] = v.degenerate;
    vertices.push_back(std::move(row));
  }
  doc["vertices"] = std::move(vertices);
  doc["rho_below_quarter"] = b.rho_below_quarter;
  doc["cor37_applicable"] = b.cor37_applicable;
  doc["cor37_bound"] = b.cor37_applicable ? number(b.cor37_bound) : Json(nullptr);
  return doc;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void write_row(std::ostringstream& os, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << ',';
    os << csv_field(row[i]);
  }
  os << '\n';
}

}  // namespace

std::string render(const Report& r, Format f) {
  if (f == Format::Json) return r.doc.dump(2) + "\n";
  std::ostringstream os;
  os << "# " << kToolName << ' ' << kToolVersion << '\n';
  if (r.doc.contains("config")) os << "# config " << r.doc["config"].dump() << '\n';
  for (std::size_t t = 0; t < r.tables.size(); ++t) {
    if (t) os << '\n';
    os << "# " << r.tables[t].name << '\n';
    write_row(os, r.tables[t].columns);
    for (const auto& row : r.tables[t].rows) write_row(os, row);
  }
  return os.str();
}

}  // namespace dyckzeta::cli
