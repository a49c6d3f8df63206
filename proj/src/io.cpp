#include "kkbec/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

namespace kkbec {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {"N", "m", "n", "U", "Uprime", "Omega", "L", "mono_metric"};

double require_number(const json& doc, const char* key) {
    if (!doc.contains(key)) {
        throw ConfigError(std::string("missing key \"") + key + "\"");
    }
    const json& v = doc.at(key);
    if (!v.is_number()) {
        throw ConfigError(std::string("key \"") + key + "\" must be a number");
    }
    return v.get<double>();
}

}  // namespace

ParameterDocument parse_parameter_document(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("parameter document must be a JSON object");
    }
    for (const auto& item : doc.items()) {
        if (!kKnownKeys.count(item.key())) {
            throw ConfigError("unknown key \"" + item.key() + "\"");
        }
    }

    ParameterDocument out;
    if (!doc.contains("N") || !doc.at("N").is_number_integer()) {
        throw ConfigError("key \"N\" must be an integer");
    }
    const auto species = doc.at("N").get<long long>();
    if (species < std::numeric_limits<int>::min() || species > std::numeric_limits<int>::max()) {
        throw ConfigError("key \"N\" out of range");
    }
    out.params.species_count = static_cast<int>(species);
    out.params.atom_mass = require_number(doc, "m");
    out.params.density = require_number(doc, "n");
    out.params.self_interaction = require_number(doc, "U");
    out.params.cross_interaction = require_number(doc, "Uprime");
    out.params.rabi = require_number(doc, "Omega");
    if (doc.contains("L") && !doc.at("L").is_null()) {
        out.params.system_length = require_number(doc, "L");
    }
    if (doc.contains("mono_metric")) {
        if (!doc.at("mono_metric").is_boolean()) {
            throw ConfigError("key \"mono_metric\" must be a boolean");
        }
        out.mono_metric = doc.at("mono_metric").get<bool>();
    }
    return out;
}

std::string to_json(const ParameterDocument& doc) {
    json j;
    j["N"] = doc.params.species_count;
    j["m"] = doc.params.atom_mass;
    j["n"] = doc.params.density;
    j["U"] = doc.params.self_interaction;
    j["Uprime"] = doc.params.cross_interaction;
    j["Omega"] = doc.params.rabi;
    j["L"] = doc.params.system_length ? json(*doc.params.system_length) : json(nullptr);
    j["mono_metric"] = doc.mono_metric;
    return j.dump();
}

std::string format_double(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out += (i ? "," : "") + table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                out += ',';
            }
            std::visit(
                [&out](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, long long>) {
                        out += std::to_string(v);
                    } else if constexpr (std::is_same_v<T, double>) {
                        out += format_double(v);
                    }
                },
                row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table, const std::string& command) {
    json rows = json::array();
    for (const auto& row : table.rows) {
        json r = json::array();
        for (const Cell& cell : row) {
            std::visit(
                [&r](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, Blank>) {
                        r.push_back(nullptr);
                    } else if constexpr (std::is_same_v<T, double>) {
                        r.push_back(std::isfinite(v) ? json(v) : json(nullptr));
                    } else {
                        r.push_back(v);
                    }
                },
                cell);
        }
        rows.push_back(std::move(r));
    }
    json doc;
    doc["command"] = command;
    doc["columns"] = table.columns;
    doc["rows"] = std::move(rows);
    return doc.dump(1) + "\n";
}

std::string to_svg(const std::vector<Curve>& curves, bool log_x, bool log_y) {
    constexpr double kWidth = 640.0;
    constexpr double kHeight = 480.0;
    constexpr double kMargin = 40.0;
    constexpr const char* kColors[] = {"#1f77b4", "#ff7f0e", "#d62728", "#2ca02c", "#9467bd",
                                       "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

    auto usable = [&](double x, double y) {
        return std::isfinite(x) && std::isfinite(y) && (!log_x || x > 0.0) && (!log_y || y > 0.0);
    };
    auto tx = [&](double x) { return log_x ? std::log10(x) : x; };
    auto ty = [&](double y) { return log_y ? std::log10(y) : y; };

    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    for (const Curve& c : curves) {
        for (std::size_t i = 0; i < std::min(c.x.size(), c.y.size()); ++i) {
            if (usable(c.x[i], c.y[i])) {
                x_lo = std::min(x_lo, tx(c.x[i]));
                x_hi = std::max(x_hi, tx(c.x[i]));
                y_lo = std::min(y_lo, ty(c.y[i]));
                y_hi = std::max(y_hi, ty(c.y[i]));
            }
        }
    }
    if (!(x_hi > x_lo)) {
        x_hi = x_lo + 1.0;
    }
    if (!(y_hi > y_lo)) {
        y_hi = y_lo + 1.0;
    }

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\">\n";
    os << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth - 2 * kMargin
       << "\" height=\"" << kHeight - 2 * kMargin << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (std::size_t k = 0; k < curves.size(); ++k) {
        const Curve& c = curves[k];
        std::string pts;
        for (std::size_t i = 0; i < std::min(c.x.size(), c.y.size()); ++i) {
            if (!usable(c.x[i], c.y[i])) {
                continue;
            }
            const double px = kMargin + (tx(c.x[i]) - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kMargin);
            const double py =
                kHeight - kMargin - (ty(c.y[i]) - y_lo) / (y_hi - y_lo) * (kHeight - 2 * kMargin);
            if (!pts.empty()) {
                pts += ' ';
            }
            pts += format_double(std::round(px * 100.0) / 100.0) + "," +
                   format_double(std::round(py * 100.0) / 100.0);
        }
        os << "<polyline fill=\"none\" stroke=\"" << kColors[k % 10] << "\" points=\"" << pts
           << "\"><title>" << c.name << "</title></polyline>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace kkbec
