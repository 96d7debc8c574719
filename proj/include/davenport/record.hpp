#pragma once

// One result row as printed by the command-line tool, with JSON, CSV and
// aligned-table renderings. All three render the same cell strings.

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "davenport/phi.hpp"
#include "davenport/search.hpp"
#include "davenport/theory.hpp"

namespace davenport {

struct LowerBoundEntry {
  std::uint32_t value = 0;
  std::string provenance;
  std::optional<std::string> witness;
  friend bool operator==(const LowerBoundEntry&, const LowerBoundEntry&) = default;
};

struct UpperBoundEntry {
  std::uint32_t value = 0;
  std::string provenance;
  bool conditional = false;
  std::string status = "unchecked";
  friend bool operator==(const UpperBoundEntry&, const UpperBoundEntry&) = default;
};

struct OutputRecord {
  std::uint32_t p = 0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  std::optional<std::uint32_t> lambda;
  std::optional<std::uint32_t> mu;
  std::optional<std::uint32_t> d_exact;
  bool certified = false;
  std::vector<LowerBoundEntry> lower_bounds;
  std::vector<UpperBoundEntry> upper_bounds;
  std::optional<std::uint64_t> extremal_count;
  std::optional<std::vector<std::string>> extremal_samples;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline void fill_bounds(OutputRecord& rec, const BoundsReport& bounds) {
  rec.lower_bounds.clear();
  rec.upper_bounds.clear();
  for (const auto& lb : bounds.lower) {
    std::optional<std::string> w;
    if (lb.witness) w = lb.witness->to_string();
    rec.lower_bounds.push_back({lb.value, lb.provenance, w});
  }
  for (const auto& ub : bounds.upper) {
    rec.upper_bounds.push_back({ub.value, ub.provenance, ub.conditional, to_string(ub.status)});
  }
}

inline OutputRecord make_record(const QuadPhi& phi) {
  OutputRecord rec;
  rec.p = phi.prime().value();
  rec.a = phi.a();
  rec.b = phi.b();
  rec.c = phi.c();
  if (phi.has_normal_form()) {
    rec.lambda = phi.lambda();
    rec.mu = phi.mu();
  }
  return rec;
}

// ---- JSON ------------------------------------------------------------------

namespace detail {

template <typename T>
nlohmann::json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <typename T>
std::optional<T> opt_from(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace detail

inline nlohmann::json to_json(const OutputRecord& r) {
  nlohmann::json lower = nlohmann::json::array();
  for (const auto& lb : r.lower_bounds) {
    lower.push_back({{"value", lb.value}, {"provenance", lb.provenance}, {"witness", detail::opt_json(lb.witness)}});
  }
  nlohmann::json upper = nlohmann::json::array();
  for (const auto& ub : r.upper_bounds) {
    upper.push_back(
        {{"value", ub.value}, {"provenance", ub.provenance}, {"conditional", ub.conditional}, {"status", ub.status}});
  }
  return {{"p", r.p},
          {"a", r.a},
          {"b", r.b},
          {"c", r.c},
          {"lambda", detail::opt_json(r.lambda)},
          {"mu", detail::opt_json(r.mu)},
          {"d_exact", detail::opt_json(r.d_exact)},
          {"certified", r.certified},
          {"lower_bounds", lower},
          {"upper_bounds", upper},
          {"extremal_count", detail::opt_json(r.extremal_count)},
          {"extremal_samples", detail::opt_json(r.extremal_samples)},
          {"nodes", r.nodes},
          {"elapsed_ms", r.elapsed_ms}};
}

inline OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord r;
  r.p = j.at("p").get<std::uint32_t>();
  r.a = j.at("a").get<std::uint32_t>();
  r.b = j.at("b").get<std::uint32_t>();
  r.c = j.at("c").get<std::uint32_t>();
  r.lambda = detail::opt_from<std::uint32_t>(j, "lambda");
  r.mu = detail::opt_from<std::uint32_t>(j, "mu");
  r.d_exact = detail::opt_from<std::uint32_t>(j, "d_exact");
  r.certified = j.at("certified").get<bool>();
  for (const auto& lb : j.at("lower_bounds")) {
    r.lower_bounds.push_back({lb.at("value").get<std::uint32_t>(), lb.at("provenance").get<std::string>(),
                              detail::opt_from<std::string>(lb, "witness")});
  }
  for (const auto& ub : j.at("upper_bounds")) {
    r.upper_bounds.push_back({ub.at("value").get<std::uint32_t>(), ub.at("provenance").get<std::string>(),
                              ub.at("conditional").get<bool>(), ub.at("status").get<std::string>()});
  }
  r.extremal_count = detail::opt_from<std::uint64_t>(j, "extremal_count");
  r.extremal_samples = detail::opt_from<std::vector<std::string>>(j, "extremal_samples");
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

// ---- cells shared by CSV and table output ----------------------------------

inline const std::vector<std::string>& record_columns() {
  static const std::vector<std::string> cols = {"p",      "a",           "b",           "c",
                                                "lambda", "mu",          "d_exact",     "certified",
                                                "lower_bounds", "upper_bounds", "extremal_count",
                                                "extremal_samples", "nodes", "elapsed_ms"};
  return cols;
}

inline std::vector<std::string> record_cells(const OutputRecord& r) {
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
  std::string lower;
  for (const auto& lb : r.lower_bounds) {
    if (!lower.empty()) lower += "; ";
    lower += std::to_string(lb.value) + " " + lb.provenance;
  }
  std::string upper;
  for (const auto& ub : r.upper_bounds) {
    if (!upper.empty()) upper += "; ";
    upper += std::to_string(ub.value) + " " + ub.provenance;
    if (ub.conditional) upper += "[" + ub.status + "]";
  }
  std::string samples;
  if (r.extremal_samples) {
    for (const auto& s : *r.extremal_samples) {
      if (!samples.empty()) samples += "; ";
      samples += s;
    }
  }
  std::ostringstream ms;
  ms << std::fixed << std::setprecision(3) << r.elapsed_ms;
  return {std::to_string(r.p),
          std::to_string(r.a),
          std::to_string(r.b),
          std::to_string(r.c),
          opt(r.lambda),
          opt(r.mu),
          opt(r.d_exact),
          r.certified ? "true" : "false",
          lower,
          upper,
          opt(r.extremal_count),
          samples,
          std::to_string(r.nodes),
          ms.str()};
}

// ---- CSV -------------------------------------------------------------------

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

inline std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_escape(cells[i]);
  }
  return out;
}

/// Splits one CSV line, undoing csv_escape.
inline std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cells.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      cells.emplace_back();
    } else {
      cells.back() += ch;
    }
  }
  return cells;
}

// ---- aligned table ---------------------------------------------------------

inline std::string render_table(const std::vector<std::vector<std::string>>& rows,
                                const std::vector<std::string>& header) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << " | ";
      out << std::left << std::setw(static_cast<int>(width[i])) << row[i];
    }
    out << '\n';
  };
  emit(header);
  std::size_t total = 0;
  for (auto w : width) total += w;
  out << std::string(total + 3 * (width.size() - 1), '-') << '\n';
  for (const auto& row : rows) emit(row);
  return out.str();
}

/// Cells of one body row of render_table output.
inline std::vector<std::string> table_split(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = line.find(" | ", start);
    std::string cell = line.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
    while (!cell.empty() && cell.back() == ' ') cell.pop_back();
    cells.push_back(cell);
    if (bar == std::string::npos) break;
    start = bar + 3;
  }
  return cells;
}

enum class OutputFormat { table, json, csv };

inline std::string format_records(const std::vector<OutputRecord>& records, OutputFormat fmt) {
  std::string out;
  switch (fmt) {
    case OutputFormat::json:
      for (const auto& r : records) out += to_json(r).dump() + '\n';
      return out;
    case OutputFormat::csv:
      out = csv_line(record_columns()) + '\n';
      for (const auto& r : records) out += csv_line(record_cells(r)) + '\n';
      return out;
    case OutputFormat::table: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : records) rows.push_back(record_cells(r));
      return render_table(rows, record_columns());
    }
  }
  return out;
}

}  // namespace davenport
