#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "monofock/clt_harness.hpp"
#include "monofock/errors.hpp"

namespace monofock::cli {

// Malformed user input; maps to exit status 2.
class ConfigError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

enum class Command { moment, converge, arcsine, enumerate, invariance };
enum class Mode { limit, finite, mc };
enum class Format { csv, json };

std::string_view to_string(Command c);
std::string_view to_string(Mode m);
std::string_view to_string(Format f);
Command parse_command(std::string_view text);
Mode parse_mode(std::string_view text);
Format parse_format(std::string_view text);

// Everything a single invocation needs. Function and interval descriptors are kept in
// canonical text form so that serialize(parse(x)) is stable.
struct RunConfig {
    std::optional<Command> command;
    std::optional<std::string> word;
    std::vector<std::string> functions;
    Order order = Order::monotone;
    std::vector<int> ns;
    std::vector<std::string> intervals;
    Mode mode = Mode::limit;
    std::optional<std::int64_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<int> n;
    std::optional<int> max_order;
    std::optional<std::string> out;
    Format format = Format::csv;

    SignWord sign_word() const;
    // One function per letter; an empty list means const:1 and a single entry broadcasts.
    std::vector<TestFunction> letter_functions() const;
    std::vector<Interval> letter_intervals() const;
    bool uses_monte_carlo() const;
};

nlohmann::json to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& doc);
std::string serialize(const RunConfig& config);
RunConfig parse_config(std::string_view text);

// Descriptor grammar: const:c | ind:lo:hi | pc:b0,v0,b1,v1,...,bk | poly:c0,c1,...
// Complex numbers are written re, re+imi, re-imi or imi.
TestFunction parse_function(std::string_view descriptor);
std::string describe_function(const TestFunction& f);
std::string canonical_function(std::string_view descriptor);

Complex parse_complex(std::string_view text);
double parse_real(std::string_view text);
std::string format_real(double x);
std::string format_complex(Complex z);

// "s:t"
Interval parse_interval(std::string_view text);
std::string describe_interval(const Interval& iv);

} // namespace monofock::cli
