#pragma once

#include <string>
#include <variant>
#include <vector>

#include "kkbec/errors.hpp"
#include "kkbec/model.hpp"

namespace kkbec {

/// Malformed or inconsistent parameter document.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// The JSON parameter document:
/// {"N": int, "m": float, "n": float, "U": float, "Uprime": float,
///  "Omega": float, "L": float|null, "mono_metric": bool}.
/// "L" and "mono_metric" may be omitted; every other key is required and
/// unknown keys are rejected.
struct ParameterDocument {
    ModelParams params;
    bool mono_metric = false;
};

ParameterDocument parse_parameter_document(const std::string& json_text);
std::string to_json(const ParameterDocument& doc);

/// Shortest decimal that round-trips to the same double ('.' separator).
/// NaN prints as "nan".
std::string format_double(double value);

struct Blank {};
using Cell = std::variant<Blank, long long, double>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Header line plus one line per row, '\n' terminated, no quoting.
std::string to_csv(const Table& table);

/// {"columns": [...], "rows": [[...], ...]} with null for blanks and NaN.
std::string to_json(const Table& table, const std::string& command);

struct Curve {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

/// Minimal standalone SVG with one polyline per curve. Points that are not
/// finite (or non-positive on a log axis) are skipped.
std::string to_svg(const std::vector<Curve>& curves, bool log_x, bool log_y);

}  // namespace kkbec
