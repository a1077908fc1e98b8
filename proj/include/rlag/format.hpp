#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rlag/polynomial.hpp"
#include "rlag/table.hpp"

namespace rlag::format {

enum class Output { text, json, csv, latex };

/// Parses "text", "json", "csv" or "latex"; throws std::invalid_argument otherwise.
Output output_from_string(const std::string& s);

/// Integers that fit in 64 bits become JSON numbers; everything else (larger
/// integers, fractions, non-constant polynomials) is emitted as a string.
nlohmann::ordered_json entry_json(const Polynomial& p);

/// Column-aligned rows, two spaces between columns.
std::string table_text(const Table<Polynomial>& t);
/// Array of rows.
std::string table_json(const Table<Polynomial>& t);
std::string table_csv(const Table<Polynomial>& t);
/// pmatrix environment, one row per line.
std::string table_latex(const Table<Polynomial>& t);

std::string table(const Table<Polynomial>& t, Output out);

/// {"layers": [matrix, ...]} for a stack of layers of a 3-D array.
std::string layers_json(const std::vector<Table<Polynomial>>& layers);

} // namespace rlag::format
