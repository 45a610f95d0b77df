// io.hpp — tabular results and their CSV/JSON serialization

#pragma once

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lambshift/errors.hpp"
#include "lambshift/shift_set.hpp"
#include "lambshift/sweep.hpp"
#include "lambshift/validity.hpp"

namespace lambshift {

inline constexpr int table_format_version = 1;

struct TableRow {
    std::vector<std::optional<double>> values;  // nullopt is written as null
    ValidityReport flags;
};

// Rows of numbers plus a trailing flags column.
struct Table {
    std::string kind;
    std::vector<std::string> columns;
    std::vector<TableRow> rows;
};

enum class OutputFormat { csv, json };

// Scientific notation with 12 significant digits; non-finite values become null.
inline std::string format_number(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.11e", x);
    return buf;
}

inline std::string format_cell(const std::optional<double>& x) {
    return x ? format_number(*x) : std::string("null");
}

// First line is a versioned comment; the header row follows.
inline void write_csv(const Table& t, std::ostream& os) {
    os << "# lambshift " << t.kind << " v" << table_format_version << '\n';
    for (const auto& c : t.columns) os << c << ',';
    os << "flags\n";
    for (const auto& r : t.rows) {
        for (const auto& v : r.values) os << format_cell(v) << ',';
        os << r.flags.joined() << '\n';
    }
}

inline nlohmann::ordered_json to_json(const Table& t) {
    nlohmann::ordered_json j;
    j["format"] = "lambshift";
    j["kind"] = t.kind;
    j["version"] = table_format_version;
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
        nlohmann::ordered_json row;
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            const auto& v = r.values.at(i);
            if (v && std::isfinite(*v)) {
                row[t.columns[i]] = *v;
            } else {
                row[t.columns[i]] = nullptr;
            }
        }
        row["flags"] = r.flags.names();
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

inline void write_json(const Table& t, std::ostream& os) { os << to_json(t).dump(2) << '\n'; }

inline void write_table(const Table& t, OutputFormat fmt, std::ostream& os) {
    if (fmt == OutputFormat::csv) {
        write_csv(t, os);
    } else {
        write_json(t, os);
    }
}

inline void save_table(const Table& t, OutputFormat fmt, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_table(t, fmt, out);
    out.flush();
    if (!out) throw IoError("write failed for '" + path + "'");
}

// ------------------------------------------------------------ sweep tables

inline const std::vector<std::string>& shift_field_names() {
    static const std::vector<std::string> names{"omega_a_bar", "omega_r_bar", "delta_nm", "chi_a",
                                                "chi_r",       "chi_ar",      "delta_omega_a"};
    return names;
}

inline std::vector<std::optional<double>> shift_fields(const ShiftSet* s) {
    if (!s) return std::vector<std::optional<double>>(shift_field_names().size());
    return {s->omega_a_bar, s->omega_r_bar, s->delta_nm,     s->chi_a,
            s->chi_r,       s->chi_ar,      s->delta_omega_a};
}

// Flattened per-route columns named <route>_<field>.
inline Table sweep_table(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    const std::vector<Route> routes = detail::unique_routes(spec.routes);
    Table t;
    t.kind = "sweep-" + std::string(to_string(spec.swept));
    t.columns.emplace_back(column_name(spec.swept));
    for (Route r : routes) {
        for (const auto& f : shift_field_names()) {
            t.columns.push_back(std::string(to_string(r)) + "_" + f);
        }
    }
    for (const auto& row : rows) {
        TableRow tr;
        tr.values.emplace_back(row.value);
        for (Route r : routes) {
            auto f = shift_fields(row.shifts(r));
            tr.values.insert(tr.values.end(), f.begin(), f.end());
        }
        tr.flags = row.flags;
        t.rows.push_back(std::move(tr));
    }
    return t;
}

}  // namespace lambshift
