#include "rlag/format.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rlag::format {

Output output_from_string(const std::string& s)
{
  if (s == "text")
    return Output::text;
  if (s == "json")
    return Output::json;
  if (s == "csv")
    return Output::csv;
  if (s == "latex")
    return Output::latex;
  throw std::invalid_argument("unknown output format '" + s + "'");
}

nlohmann::ordered_json entry_json(const Polynomial& p)
{
  if (p.is_constant()) {
    const Rational c = p.constant_term();
    if (c.fits_int64())
      return c.to_int64();
    return c.str();
  }
  return p.str();
}

std::string table_text(const Table<Polynomial>& t)
{
  std::vector<std::size_t> width;
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : t) {
    auto& out = cells.emplace_back();
    for (std::size_t j = 0; j < row.size(); ++j) {
      out.push_back(row[j].str());
      if (width.size() <= j)
        width.push_back(0);
      width[j] = std::max(width[j], out.back().size());
    }
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j)
        line += "  ";
      line += std::string(width[j] - row[j].size(), ' ') + row[j];
    }
    os << line << '\n';
  }
  return os.str();
}

namespace {

nlohmann::ordered_json matrix_json(const Table<Polynomial>& t)
{
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& e : row)
      r.push_back(entry_json(e));
    rows.push_back(std::move(r));
  }
  return rows;
}

} // namespace

std::string table_json(const Table<Polynomial>& t) { return matrix_json(t).dump() + "\n"; }

std::string table_csv(const Table<Polynomial>& t)
{
  std::ostringstream os;
  for (const auto& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j)
      os << (j ? "," : "") << row[j].str();
    os << '\n';
  }
  return os.str();
}

std::string table_latex(const Table<Polynomial>& t)
{
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t[i].size(); ++j)
      os << (j ? " & " : "") << t[i][j].latex();
    os << (i + 1 < t.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{pmatrix}\n";
  return os.str();
}

std::string table(const Table<Polynomial>& t, Output out)
{
  switch (out) {
  case Output::text: return table_text(t);
  case Output::json: return table_json(t);
  case Output::csv: return table_csv(t);
  case Output::latex: return table_latex(t);
  }
  return {};
}

std::string layers_json(const std::vector<Table<Polynomial>>& layers)
{
  nlohmann::ordered_json j;
  j["layers"] = nlohmann::ordered_json::array();
  for (const auto& l : layers)
    j["layers"].push_back(matrix_json(l));
  return j.dump() + "\n";
}

} // namespace rlag::format
