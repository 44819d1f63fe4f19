#pragma once

// Machine-readable output records for the command-line tool: one flat
// schema rendered as JSON or CSV with deterministic bytes.  Doubles are
// printed shortest-round-trip, so re-parsing reproduces them bit-exactly.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace lamew::output {

using Value = std::variant<double, long long, std::string, bool>;

struct Row {
    std::vector<std::pair<std::string, Value>> fields;

    Row& add(const std::string& key, double v) {
        fields.emplace_back(key, v);
        return *this;
    }
    Row& add(const std::string& key, long long v) {
        fields.emplace_back(key, v);
        return *this;
    }
    Row& add(const std::string& key, int v) { return add(key, static_cast<long long>(v)); }
    Row& add(const std::string& key, const std::string& v) {
        fields.emplace_back(key, v);
        return *this;
    }
    Row& add(const std::string& key, bool v) {
        fields.emplace_back(key, v);
        return *this;
    }
};

struct OutputRecord {
    std::string schema_version = "1";
    std::string command;
    Row params;
    std::vector<Row> results;
    Row diagnostics;
};

inline std::string format_double(double x) {
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    std::string s(buf, res.ptr);
    // ensure a JSON number token (to_chars may emit e.g. "1e+30" which is fine,
    // but a bare integer like "42" round-trips as integer; keep it numeric)
    return s;
}

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string value_json(const Value& v) {
    if (std::holds_alternative<double>(v)) {
        const double x = std::get<double>(v);
        if (!std::isfinite(x))
            return "\"" + format_double(x) + "\"";
        return format_double(x);
    }
    if (std::holds_alternative<long long>(v))
        return std::to_string(std::get<long long>(v));
    if (std::holds_alternative<bool>(v))
        return std::get<bool>(v) ? "true" : "false";
    return "\"" + json_escape(std::get<std::string>(v)) + "\"";
}

inline std::string value_csv(const Value& v) {
    if (std::holds_alternative<double>(v))
        return format_double(std::get<double>(v));
    if (std::holds_alternative<long long>(v))
        return std::to_string(std::get<long long>(v));
    if (std::holds_alternative<bool>(v))
        return std::get<bool>(v) ? "true" : "false";
    const std::string& s = std::get<std::string>(v);
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline void row_json(std::string& out, const Row& r) {
    out += '{';
    for (std::size_t i = 0; i < r.fields.size(); ++i) {
        if (i)
            out += ',';
        out += '"';
        out += json_escape(r.fields[i].first);
        out += "\":";
        out += value_json(r.fields[i].second);
    }
    out += '}';
}

}  // namespace detail

inline std::string to_json(const OutputRecord& rec) {
    std::string out = "{\"schema_version\":\"" + rec.schema_version + "\",\"command\":\"" +
                      detail::json_escape(rec.command) + "\",\"params\":";
    detail::row_json(out, rec.params);
    out += ",\"results\":[";
    for (std::size_t i = 0; i < rec.results.size(); ++i) {
        if (i)
            out += ',';
        detail::row_json(out, rec.results[i]);
    }
    out += "],\"diagnostics\":";
    detail::row_json(out, rec.diagnostics);
    out += "}\n";
    return out;
}

// CSV: a header built from the first result row (all rows of a subcommand
// share one shape), then one line per row.
inline std::string to_csv(const OutputRecord& rec) {
    std::string out;
    if (rec.results.empty())
        return out;
    const Row& head = rec.results.front();
    for (std::size_t i = 0; i < head.fields.size(); ++i) {
        if (i)
            out += ',';
        out += head.fields[i].first;
    }
    out += '\n';
    for (const Row& r : rec.results) {
        for (std::size_t i = 0; i < r.fields.size(); ++i) {
            if (i)
                out += ',';
            out += detail::value_csv(r.fields[i].second);
        }
        out += '\n';
    }
    return out;
}

}  // namespace lamew::output
