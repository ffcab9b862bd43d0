#include "heckerep/cli/output.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace heckerep::cli {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "pretty") return Format::Pretty;
  throw std::invalid_argument("unknown format '" + s + "' (json, csv, pretty)");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

bool is_zero_decimal(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '.' || c == '-'; });
}

}  // namespace

void emit(const Output& out, Format format, std::ostream& os) {
  switch (format) {
    case Format::Json:
      os << out.doc.dump(2) << "\n";
      return;
    case Format::Csv:
      for (const auto& t : out.tables) {
        os << "# " << t.title << "\n";
        for (std::size_t c = 0; c < t.header.size(); ++c) os << (c ? "," : "") << csv_field(t.header[c]);
        os << "\n";
        for (const auto& row : t.rows) {
          for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(row[c]);
          os << "\n";
        }
      }
      return;
    case Format::Pretty:
      for (std::size_t k = 0; k < out.tables.size(); ++k) {
        const auto& t = out.tables[k];
        if (k) os << "\n";
        os << t.title << "\n";
        std::vector<std::size_t> width(t.header.size(), 0);
        for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
        for (const auto& row : t.rows)
          for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
        auto line = [&](const std::vector<std::string>& cells) {
          for (std::size_t c = 0; c < cells.size(); ++c) {
            const std::size_t w = c < width.size() ? width[c] : 0;
            const std::string pad(w > cells[c].size() ? w - cells[c].size() : 0, ' ');
            // Labels in the first column read left to right; values line up on the right.
            if (c == 0) os << cells[c] << pad;
            else os << "  " << pad << cells[c];
          }
          os << "\n";
        };
        if (!t.header.empty()) line(t.header);
        for (const auto& row : t.rows) line(row);
      }
      return;
  }
}

std::string decimal(const CycNumber& x, int precision) {
  auto [re, im] = embed_decimal(x, precision);
  auto clean = [](std::string s) {
    if (is_zero_decimal(s) && s[0] == '-') s.erase(0, 1);
    return s;
  };
  re = clean(re);
  im = clean(im);
  if (is_zero_decimal(im)) return re;
  if (im[0] != '-') im = "+" + im;
  return re + im + "i";
}

std::string decimal(double x, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, x);
  return buf;
}

Table matrix_table(const std::string& title, const ExactMatrix& m, int precision) {
  Table t{title, {}, {}};
  t.header.push_back("");
  for (std::size_t j = 0; j < m.cols(); ++j) t.header.push_back(std::to_string(j));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row{std::to_string(i)};
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(decimal(m(i, j), precision));
    t.rows.push_back(std::move(row));
  }
  return t;
}

nlohmann::json report_json(const RelationReport& r) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : r.results) {
    nlohmann::json w = nullptr;
    if (x.witness) w = {x.witness->first, x.witness->second};
    a.push_back({{"relation", x.relation}, {"pass", x.pass}, {"witness", w}});
  }
  return a;
}

Table report_table(const std::string& title, const RelationReport& r) {
  Table t{title, {"relation", "pass", "witness"}, {}};
  for (const auto& x : r.results)
    t.rows.push_back({x.relation, x.pass ? "pass" : "FAIL",
                      x.witness ? "(" + std::to_string(x.witness->first) + "," + std::to_string(x.witness->second) + ")"
                                : "-"});
  for (const auto& n : r.notes) t.rows.push_back({"note: " + n, "", ""});
  return t;
}

}  // namespace heckerep::cli
