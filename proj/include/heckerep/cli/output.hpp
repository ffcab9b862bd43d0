#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "heckerep/exactnum/cyclotomic.hpp"
#include "heckerep/exactnum/exact_matrix.hpp"
#include "heckerep/report.hpp"

namespace heckerep::cli {

enum class Format { Json, Csv, Pretty };
Format parse_format(const std::string& s);

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// What a subcommand produces: the JSON document plus tables for csv/pretty output.
struct Output {
  nlohmann::json doc = nlohmann::json::object();
  std::vector<Table> tables;
};

void emit(const Output& out, Format format, std::ostream& os);

// Decimal rendering with `precision` digits after the point ("re" or "re+imi").
std::string decimal(const CycNumber& x, int precision);
std::string decimal(double x, int precision);
Table matrix_table(const std::string& title, const ExactMatrix& m, int precision);
nlohmann::json report_json(const RelationReport& r);
Table report_table(const std::string& title, const RelationReport& r);

}  // namespace heckerep::cli
