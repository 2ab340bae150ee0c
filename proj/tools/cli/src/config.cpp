#include "monofock_cli/config.hpp"

#include <charconv>
#include <cmath>
#include <set>

#include <fmt/format.h>

namespace monofock::cli {

namespace {

using nlohmann::json;

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

// Shortest round-trip text; used for descriptors, where 17 forced digits would only add noise.
std::string short_real(double x)
{
    return fmt::format("{}", x == 0.0 ? 0.0 : x);
}

std::string short_complex(Complex z)
{
    if (z.imag() == 0.0) {
        return short_real(z.real());
    }
    const std::string im = short_real(z.imag());
    return short_real(z.real()) + (z.imag() > 0.0 ? "+" : "") + im + "i";
}

std::string join(const std::vector<std::string>& parts, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += parts[i];
    }
    return out;
}

template <class T>
T lookup(std::string_view text, std::initializer_list<std::pair<std::string_view, T>> table, std::string_view what)
{
    for (const auto& [name, value] : table) {
        if (text == name) {
            return value;
        }
    }
    throw ConfigError("unknown " + std::string(what) + " '" + std::string(text) + "'");
}

} // namespace

std::string_view to_string(Command c)
{
    switch (c) {
    case Command::moment:
        return "moment";
    case Command::converge:
        return "converge";
    case Command::arcsine:
        return "arcsine";
    case Command::enumerate:
        return "enumerate";
    case Command::invariance:
        return "invariance";
    }
    return "?";
}

std::string_view to_string(Mode m)
{
    switch (m) {
    case Mode::limit:
        return "limit";
    case Mode::finite:
        return "finite";
    case Mode::mc:
        return "mc";
    }
    return "?";
}

std::string_view to_string(Format f)
{
    return f == Format::csv ? "csv" : "json";
}

Command parse_command(std::string_view text)
{
    return lookup<Command>(text,
                           {{"moment", Command::moment},
                            {"converge", Command::converge},
                            {"arcsine", Command::arcsine},
                            {"enumerate", Command::enumerate},
                            {"invariance", Command::invariance}},
                           "command");
}

Mode parse_mode(std::string_view text)
{
    return lookup<Mode>(text, {{"limit", Mode::limit}, {"finite", Mode::finite}, {"mc", Mode::mc}}, "mode");
}

Format parse_format(std::string_view text)
{
    return lookup<Format>(text, {{"csv", Format::csv}, {"json", Format::json}}, "format");
}

double parse_real(std::string_view text)
{
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw ConfigError("not a finite number: '" + std::string(text) + "'");
    }
    return value;
}

Complex parse_complex(std::string_view text)
{
    if (text.empty()) {
        throw ConfigError("empty complex number");
    }
    if (text.back() != 'i') {
        return {parse_real(text), 0.0};
    }
    const std::string_view body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not a leading sign or part of an exponent.
    std::size_t split_at = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    const std::string_view re = split_at == std::string_view::npos ? std::string_view{} : body.substr(0, split_at);
    std::string_view im = split_at == std::string_view::npos ? body : body.substr(split_at);
    double imag = 0.0;
    if (im.empty() || im == "+") {
        imag = 1.0;
    } else if (im == "-") {
        imag = -1.0;
    } else {
        imag = parse_real(im);
    }
    return {re.empty() ? 0.0 : parse_real(re), imag};
}

std::string format_real(double x)
{
    return fmt::format("{:.17g}", x == 0.0 ? 0.0 : x);
}

std::string format_complex(Complex z)
{
    if (z.imag() == 0.0) {
        return format_real(z.real());
    }
    return fmt::format("{:.17g}{:+.17g}i", z.real() == 0.0 ? 0.0 : z.real(), z.imag());
}

TestFunction parse_function(std::string_view descriptor)
{
    const std::size_t colon = descriptor.find(':');
    if (colon == std::string_view::npos) {
        throw ConfigError("function descriptor needs a kind prefix: '" + std::string(descriptor) + "'");
    }
    const std::string_view kind = descriptor.substr(0, colon);
    const std::string_view args = descriptor.substr(colon + 1);
    try {
        if (kind == "const") {
            return TestFunction::constant(parse_complex(args));
        }
        if (kind == "ind") {
            const auto parts = split(args, ':');
            if (parts.size() != 2) {
                throw ConfigError("ind needs lo:hi");
            }
            return TestFunction::indicator(parse_real(parts[0]), parse_real(parts[1]));
        }
        if (kind == "pc") {
            const auto parts = split(args, ',');
            if (parts.size() < 3 || parts.size() % 2 == 0) {
                throw ConfigError("pc needs b0,v0,b1,...,bk");
            }
            std::vector<double> breaks;
            std::vector<Complex> values;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i % 2 == 0) {
                    breaks.push_back(parse_real(parts[i]));
                } else {
                    values.push_back(parse_complex(parts[i]));
                }
            }
            return TestFunction::piecewise(std::move(breaks), std::move(values));
        }
        if (kind == "poly") {
            std::vector<Complex> coefficients;
            for (const auto part : split(args, ',')) {
                coefficients.push_back(parse_complex(part));
            }
            return TestFunction::polynomial(std::move(coefficients));
        }
    } catch (const ConfigError& e) {
        throw ConfigError("bad function descriptor '" + std::string(descriptor) + "': " + e.what());
    } catch (const InvalidArgument& e) {
        throw ConfigError("bad function descriptor '" + std::string(descriptor) + "': " + e.what());
    }
    throw ConfigError("unknown function kind '" + std::string(kind) + "'");
}

std::string describe_function(const TestFunction& f)
{
    struct Visitor {
        std::string operator()(const TestFunction::Constant& c) const { return "const:" + short_complex(c.value); }
        std::string operator()(const TestFunction::Indicator& ind) const
        {
            return "ind:" + short_real(ind.lo) + ":" + short_real(ind.hi);
        }
        std::string operator()(const TestFunction::PiecewiseConstant& pc) const
        {
            std::vector<std::string> parts;
            for (std::size_t i = 0; i < pc.values.size(); ++i) {
                parts.push_back(short_real(pc.breakpoints[i]));
                parts.push_back(short_complex(pc.values[i]));
            }
            parts.push_back(short_real(pc.breakpoints.back()));
            return "pc:" + join(parts, ',');
        }
        std::string operator()(const TestFunction::Polynomial& p) const
        {
            std::vector<std::string> parts;
            for (const Complex& c : p.coefficients) {
                parts.push_back(short_complex(c));
            }
            return "poly:" + join(parts, ',');
        }
        std::string operator()(const TestFunction::Opaque& o) const
        {
            throw ConfigError("opaque function '" + o.label + "' has no descriptor");
        }
    };
    return std::visit(Visitor{}, f.representation());
}

std::string canonical_function(std::string_view descriptor)
{
    return describe_function(parse_function(descriptor));
}

Interval parse_interval(std::string_view text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 2) {
        throw ConfigError("interval must be s:t, got '" + std::string(text) + "'");
    }
    try {
        return Interval(parse_real(parts[0]), parse_real(parts[1]));
    } catch (const InvalidArgument& e) {
        throw ConfigError("bad interval '" + std::string(text) + "': " + e.what());
    }
}

std::string describe_interval(const Interval& iv)
{
    return short_real(iv.s) + ":" + short_real(iv.t);
}

SignWord RunConfig::sign_word() const
{
    if (!word) {
        throw ConfigError("this command needs a word");
    }
    try {
        return SignWord::parse(*word);
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    }
}

std::vector<TestFunction> RunConfig::letter_functions() const
{
    const std::size_t m = sign_word().size();
    if (functions.empty()) {
        return std::vector<TestFunction>(m, TestFunction::constant(1.0));
    }
    if (functions.size() == 1) {
        return std::vector<TestFunction>(m, parse_function(functions.front()));
    }
    if (functions.size() != m) {
        throw ConfigError(fmt::format("{} functions given for a word of length {}", functions.size(), m));
    }
    std::vector<TestFunction> out;
    for (const auto& d : functions) {
        out.push_back(parse_function(d));
    }
    return out;
}

std::vector<Interval> RunConfig::letter_intervals() const
{
    const std::size_t m = sign_word().size();
    if (intervals.empty()) {
        return std::vector<Interval>(m, Interval(0.0, 1.0));
    }
    if (intervals.size() == 1) {
        return std::vector<Interval>(m, parse_interval(intervals.front()));
    }
    if (intervals.size() != m) {
        throw ConfigError(fmt::format("{} intervals given for a word of length {}", intervals.size(), m));
    }
    std::vector<Interval> out;
    for (const auto& d : intervals) {
        out.push_back(parse_interval(d));
    }
    return out;
}

bool RunConfig::uses_monte_carlo() const
{
    return mode == Mode::mc && (command == Command::moment || command == Command::invariance);
}

json to_json(const RunConfig& c)
{
    json doc = json::object();
    if (c.command) {
        doc["command"] = to_string(*c.command);
    }
    if (c.word) {
        doc["word"] = *c.word;
    }
    if (!c.functions.empty()) {
        doc["functions"] = c.functions;
    }
    doc["order"] = to_string(c.order);
    if (!c.ns.empty()) {
        doc["ns"] = c.ns;
    }
    if (!c.intervals.empty()) {
        doc["intervals"] = c.intervals;
    }
    doc["mode"] = to_string(c.mode);
    if (c.samples) {
        doc["samples"] = *c.samples;
    }
    if (c.seed) {
        doc["seed"] = *c.seed;
    }
    if (c.n) {
        doc["n"] = *c.n;
    }
    if (c.max_order) {
        doc["max_order"] = *c.max_order;
    }
    if (c.out) {
        doc["out"] = *c.out;
    }
    doc["format"] = to_string(c.format);
    return doc;
}

RunConfig config_from_json(const json& doc)
{
    if (!doc.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    static const std::set<std::string> known{"command", "word",    "functions", "order", "ns",  "intervals", "mode",
                                             "samples", "seed",    "n",         "max_order", "out", "format"};
    for (const auto& [key, _] : doc.items()) {
        if (!known.contains(key)) {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    RunConfig c;
    try {
        if (doc.contains("command")) {
            c.command = parse_command(doc.at("command").get<std::string>());
        }
        if (doc.contains("word")) {
            c.word = doc.at("word").get<std::string>();
            (void)c.sign_word();
        }
        if (doc.contains("functions")) {
            for (const auto& d : doc.at("functions").get<std::vector<std::string>>()) {
                c.functions.push_back(canonical_function(d));
            }
        }
        if (doc.contains("order")) {
            try {
                c.order = parse_order(doc.at("order").get<std::string>());
            } catch (const InvalidArgument& e) {
                throw ConfigError(e.what());
            }
        }
        if (doc.contains("ns")) {
            c.ns = doc.at("ns").get<std::vector<int>>();
        }
        if (doc.contains("intervals")) {
            for (const auto& d : doc.at("intervals").get<std::vector<std::string>>()) {
                c.intervals.push_back(describe_interval(parse_interval(d)));
            }
        }
        if (doc.contains("mode")) {
            c.mode = parse_mode(doc.at("mode").get<std::string>());
        }
        if (doc.contains("samples")) {
            c.samples = doc.at("samples").get<std::int64_t>();
        }
        if (doc.contains("seed")) {
            c.seed = doc.at("seed").get<std::uint64_t>();
        }
        if (doc.contains("n")) {
            c.n = doc.at("n").get<int>();
        }
        if (doc.contains("max_order")) {
            c.max_order = doc.at("max_order").get<int>();
        }
        if (doc.contains("out")) {
            c.out = doc.at("out").get<std::string>();
        }
        if (doc.contains("format")) {
            c.format = parse_format(doc.at("format").get<std::string>());
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config type error: ") + e.what());
    }
    return c;
}

std::string serialize(const RunConfig& config)
{
    return to_json(config).dump(2) + "\n";
}

RunConfig parse_config(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return config_from_json(doc);
}

} // namespace monofock::cli
