#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "monofock_cli/commands.hpp"

namespace monofock::cli {

namespace {

struct Flags {
    std::string config_path;
    std::string word;
    std::vector<std::string> functions;
    std::string order;
    std::vector<int> ns;
    std::vector<std::string> intervals;
    std::string mode;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    int n = 0;
    int max_order = 0;
    std::string out;
    std::string format;
};

struct Options {
    CLI::Option* config = nullptr;
    CLI::Option* word = nullptr;
    CLI::Option* functions = nullptr;
    CLI::Option* order = nullptr;
    CLI::Option* ns = nullptr;
    CLI::Option* intervals = nullptr;
    CLI::Option* mode = nullptr;
    CLI::Option* samples = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* n = nullptr;
    CLI::Option* max_order = nullptr;
    CLI::Option* out = nullptr;
    CLI::Option* format = nullptr;
};

Options add_options(CLI::App& app, Flags& f)
{
    Options o;
    o.config = app.add_option("--config", f.config_path, "JSON run config; flags override its values");
    o.word = app.add_option("-w,--word", f.word, "sign word such as --++ (write --word=--++)");
    o.functions = app.add_option("-f,--function", f.functions,
                                 "test function per letter: const:c, ind:lo:hi, pc:b0,v0,...,bk, poly:c0,c1,...");
    o.order = app.add_option("--order", f.order, "monotone or anti");
    o.ns = app.add_option("--ns", f.ns, "N grid, comma separated")->delimiter(',');
    o.intervals = app.add_option("--interval", f.intervals, "time interval s:t per letter");
    o.mode = app.add_option("--mode", f.mode, "moment evaluation: limit, finite or mc");
    o.samples = app.add_option("--samples", f.samples, "Monte Carlo sample count");
    o.seed = app.add_option("--seed", f.seed, "Monte Carlo seed");
    o.n = app.add_option("--n", f.n, "Dyck half-length for enumerate");
    o.max_order = app.add_option("--max-order", f.max_order, "largest arcsine moment order");
    o.out = app.add_option("-o,--out", f.out, "output path (default stdout)");
    o.format = app.add_option("--format", f.format, "csv or json");
    return o;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunConfig build_config(const Flags& f, const Options& o, std::optional<Command> subcommand)
{
    RunConfig c = o.config->count() ? parse_config(read_file(f.config_path)) : RunConfig{};
    if (subcommand) {
        c.command = subcommand;
    }
    if (o.word->count()) {
        c.word = f.word;
        (void)c.sign_word();
    }
    if (o.functions->count()) {
        c.functions.clear();
        for (const auto& d : f.functions) {
            c.functions.push_back(canonical_function(d));
        }
    }
    if (o.order->count()) {
        try {
            c.order = parse_order(f.order);
        } catch (const InvalidArgument& e) {
            throw ConfigError(e.what());
        }
    }
    if (o.ns->count()) {
        c.ns = f.ns;
    }
    if (o.intervals->count()) {
        c.intervals.clear();
        for (const auto& d : f.intervals) {
            c.intervals.push_back(describe_interval(parse_interval(d)));
        }
    }
    if (o.mode->count()) {
        c.mode = parse_mode(f.mode);
    }
    if (o.samples->count()) {
        c.samples = f.samples;
    }
    if (o.seed->count()) {
        c.seed = f.seed;
    }
    if (o.n->count()) {
        c.n = f.n;
    }
    if (o.max_order->count()) {
        c.max_order = f.max_order;
    }
    if (o.out->count()) {
        c.out = f.out;
    }
    if (o.format->count()) {
        c.format = parse_format(f.format);
    }
    return c;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Vacuum moments on monotone and anti-monotone Fock spaces", "monofock"};
    app.require_subcommand(0, 1);
    Flags flags;
    const Options options = add_options(app, flags);
    std::vector<std::pair<CLI::App*, Command>> subcommands;
    for (Command cmd : {Command::moment, Command::converge, Command::arcsine, Command::enumerate, Command::invariance}) {
        auto* sub = app.add_subcommand(std::string(to_string(cmd)));
        sub->fallthrough();
        subcommands.emplace_back(sub, cmd);
    }
    subcommands[0].first->description("one vacuum moment: exact limit, finite N, or Monte Carlo");
    subcommands[1].first->description("finite-N moments against the exact limit");
    subcommands[2].first->description("position-sum moments against the arcsine law");
    subcommands[3].first->description("Dyck words with their non-crossing pair partitions");
    subcommands[4].first->description("interval-restricted process moments");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back(); // program name
    }
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_config_error;
    }

    std::optional<Command> chosen;
    for (const auto& [sub, cmd] : subcommands) {
        if (sub->parsed()) {
            chosen = cmd;
        }
    }
    try {
        const RunConfig config = build_config(flags, options, chosen);
        const std::string text = render(execute(config), config.format);
        if (config.out && !config.out->empty() && *config.out != "-") {
            std::ofstream file(*config.out, std::ios::binary);
            if (!file || !(file << text)) {
                throw ConfigError("cannot write output file '" + *config.out + "'");
            }
        } else {
            out << text;
        }
        return exit_ok;
    } catch (const UnsupportedRepresentationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_unsupported;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << "\n";
        return exit_unsupported;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_config_error;
    }
}

} // namespace monofock::cli
