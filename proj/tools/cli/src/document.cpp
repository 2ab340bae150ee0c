#include "monofock_cli/document.hpp"

#include "monofock_cli/config.hpp"

namespace monofock::cli {

namespace {

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + "\"";
}

struct CsvCell {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(Complex z) const { return format_complex(z); }
    std::string operator()(const std::string& s) const { return csv_escape(s); }
};

struct JsonCell {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(std::int64_t v) const { return v; }
    nlohmann::json operator()(double v) const { return v; }
    nlohmann::json operator()(Complex z) const
    {
        if (z.imag() == 0.0) {
            return z.real();
        }
        return {{"re", z.real()}, {"im", z.imag()}};
    }
    nlohmann::json operator()(const std::string& s) const { return s; }
};

} // namespace

std::string render_csv(const Document& doc)
{
    std::string out;
    for (std::size_t i = 0; i < doc.columns.size(); ++i) {
        out += (i ? "," : "") + csv_escape(doc.columns[i]);
    }
    out += '\n';
    for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += (i ? "," : "") + std::visit(CsvCell{}, row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const Document& doc)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : doc.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const Cell& cell : row) {
            r.push_back(std::visit(JsonCell{}, cell));
        }
        rows.push_back(std::move(r));
    }
    const nlohmann::json out{
        {"command", doc.command},
        {"config", doc.config},
        {"columns", doc.columns},
        {"rows", std::move(rows)},
    };
    return out.dump(2) + "\n";
}

} // namespace monofock::cli
