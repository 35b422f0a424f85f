#include "corrterms/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace corrterms {

OutputFormat parse_format(const std::string& name) {
  if (name == "pretty") return OutputFormat::pretty;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw invalid_input("unknown output format '" + name + "' (expected pretty, json, or csv)");
}

std::string join_csv(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += items[i];
  }
  return out;
}

std::vector<std::string> rational_strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(v.str());
  return out;
}

namespace {

std::vector<long long> index_range(long long modulus, bool uncentered) {
  std::vector<long long> out;
  if (uncentered) {
    for (long long i = 0; i < modulus; ++i) out.push_back(i);
  } else {
    for (long long c = centered_min(modulus); c <= centered_max(modulus); ++c) out.push_back(c);
  }
  return out;
}

}  // namespace

nlohmann::ordered_json table_json(const CorrectionTable& t, bool uncentered_display) {
  nlohmann::ordered_json j;
  j["type"] = "correction-table";
  j["modulus"] = t.modulus();
  j["display"] = uncentered_display ? "uncentered" : "centered";
  j["indices"] = index_range(t.modulus(), uncentered_display);
  j["values"] =
      rational_strings(uncentered_display ? t.uncentered() : t.centered_values());
  return j;
}

nlohmann::ordered_json matrix_json(const CorrectionMatrix& m) {
  nlohmann::ordered_json j;
  j["type"] = "correction-matrix";
  j["row_modulus"] = m.row_modulus();
  j["col_modulus"] = m.col_modulus();
  j["row_indices"] = index_range(m.row_modulus(), false);
  j["col_indices"] = index_range(m.col_modulus(), false);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : m.centered_rows()) {
    rows.push_back(rational_strings(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

namespace {

Rational parse_rational_field(const nlohmann::ordered_json& v) {
  if (!v.is_string()) throw invalid_input("expected a rational encoded as a string");
  return Rational::parse(v.get<std::string>());
}

}  // namespace

bool table_json_is_uncentered(const nlohmann::ordered_json& j) {
  const std::string display = j.at("display").get<std::string>();
  if (display == "uncentered") return true;
  if (display == "centered") return false;
  throw invalid_input("correction-table JSON: unknown display mode '" + display + "'");
}

CorrectionTable table_from_json(const nlohmann::ordered_json& j) {
  if (j.at("type").get<std::string>() != "correction-table") {
    throw invalid_input("expected a correction-table JSON object");
  }
  const long long modulus = j.at("modulus").get<long long>();
  const bool uncentered = table_json_is_uncentered(j);
  const auto& vals = j.at("values");
  if (static_cast<long long>(vals.size()) != modulus) {
    throw invalid_input("correction-table JSON: wrong number of values");
  }
  std::vector<Rational> storage(static_cast<std::size_t>(modulus), Rational(0));
  long long pos = 0;
  for (const auto& v : vals) {
    const long long idx = uncentered ? pos : centered_min(modulus) + pos;
    const long long u = ((idx % modulus) + modulus) % modulus;
    storage[static_cast<std::size_t>(u)] = parse_rational_field(v);
    ++pos;
  }
  return CorrectionTable(modulus, std::move(storage));
}

CorrectionMatrix matrix_from_json(const nlohmann::ordered_json& j) {
  if (j.at("type").get<std::string>() != "correction-matrix") {
    throw invalid_input("expected a correction-matrix JSON object");
  }
  const long long rows = j.at("row_modulus").get<long long>();
  const long long cols = j.at("col_modulus").get<long long>();
  const auto& grid = j.at("rows");
  if (static_cast<long long>(grid.size()) != rows) {
    throw invalid_input("correction-matrix JSON: wrong number of rows");
  }
  std::vector<std::vector<Rational>> storage(
      static_cast<std::size_t>(rows),
      std::vector<Rational>(static_cast<std::size_t>(cols), Rational(0)));
  long long ri = 0;
  for (const auto& row : grid) {
    if (static_cast<long long>(row.size()) != cols) {
      throw invalid_input("correction-matrix JSON: wrong number of columns");
    }
    const long long i = centered_min(rows) + ri;
    const long long iu = ((i % rows) + rows) % rows;
    long long cj = 0;
    for (const auto& v : row) {
      const long long jc = centered_min(cols) + cj;
      const long long ju = ((jc % cols) + cols) % cols;
      storage[static_cast<std::size_t>(iu)][static_cast<std::size_t>(ju)] =
          parse_rational_field(v);
      ++cj;
    }
    ++ri;
  }
  return CorrectionMatrix(rows, cols, std::move(storage));
}

std::string dump_json(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

namespace {

void print_aligned(std::ostream& out, const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& body) {
  std::vector<std::size_t> widths(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
  for (const auto& row : body) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      out << std::setw(static_cast<int>(widths[c])) << row[c];
    }
    out << "\n";
  };
  emit(header);
  for (const auto& row : body) emit(row);
}

}  // namespace

void print_table_pretty(std::ostream& out, const CorrectionTable& t, bool uncentered_display,
                        const std::string& title) {
  if (!title.empty()) out << title << "\n";
  std::vector<long long> idx = index_range(t.modulus(), uncentered_display);
  std::vector<std::string> header{"i", "d"};
  std::vector<std::vector<std::string>> body;
  const std::vector<Rational> vals =
      uncentered_display ? t.uncentered() : t.centered_values();
  for (std::size_t r = 0; r < vals.size(); ++r) {
    body.push_back({std::to_string(idx[r]), vals[r].str()});
  }
  print_aligned(out, header, body);
}

void print_matrix_pretty(std::ostream& out, const CorrectionMatrix& m, const std::string& title) {
  if (!title.empty()) out << title << "\n";
  std::vector<std::string> header{"i\\j"};
  for (long long cj = centered_min(m.col_modulus()); cj <= centered_max(m.col_modulus()); ++cj) {
    header.push_back(std::to_string(cj));
  }
  std::vector<std::vector<std::string>> body;
  const auto grid = m.centered_rows();
  long long ci = centered_min(m.row_modulus());
  for (const auto& row : grid) {
    std::vector<std::string> line{std::to_string(ci)};
    for (const Rational& v : row) line.push_back(v.str());
    body.push_back(std::move(line));
    ++ci;
  }
  print_aligned(out, header, body);
}

void print_table_csv(std::ostream& out, const CorrectionTable& t, bool uncentered_display) {
  const std::vector<Rational> vals =
      uncentered_display ? t.uncentered() : t.centered_values();
  out << join_csv(rational_strings(vals)) << "\n";
}

void print_matrix_csv(std::ostream& out, const CorrectionMatrix& m) {
  for (const auto& row : m.centered_rows()) {
    out << join_csv(rational_strings(row)) << "\n";
  }
}

}  // namespace corrterms
