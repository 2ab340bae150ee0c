#include "monofock_cli/commands.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "monofock/anti_monotone.hpp"

namespace monofock::cli {

namespace {

Cell rational_cell(const std::optional<Rational>& r)
{
    return r ? Cell{monofock::to_string(*r)} : Cell{};
}

Cell note_cell(const SignWord& word)
{
    const Vanishing v = vanishing_reason(word);
    return v == Vanishing::none ? Cell{} : Cell{std::string(describe(v))};
}

std::vector<int> require_ns(const RunConfig& c)
{
    if (c.ns.empty()) {
        throw ConfigError("an N grid is required (--ns)");
    }
    for (std::size_t i = 0; i < c.ns.size(); ++i) {
        if (c.ns[i] < 1 || (i > 0 && c.ns[i] <= c.ns[i - 1])) {
            throw ConfigError("the N grid must be positive and strictly increasing");
        }
    }
    return c.ns;
}

MonteCarloOptions mc_options(const RunConfig& c)
{
    if (!c.seed) {
        throw ConfigError("Monte Carlo runs need an explicit seed (--seed)");
    }
    const std::int64_t samples = c.samples.value_or(default_mc_samples);
    if (samples < 2) {
        throw ConfigError("Monte Carlo needs at least 2 samples");
    }
    return {samples, *c.seed};
}

Document start(const RunConfig& c, std::vector<std::string> columns)
{
    return Document{std::string(to_string(*c.command)), to_json(c), std::move(columns), {}};
}

} // namespace

Document cmd_moment(const RunConfig& c)
{
    const MomentSpec spec(c.sign_word(), c.letter_functions(), c.order);
    Document doc = start(c, {"mode", "N", "value", "std_error", "exact", "note"});
    const Cell note = note_cell(spec.word);
    const Cell mode{std::string(to_string(c.mode))};
    switch (c.mode) {
    case Mode::limit: {
        Complex value{};
        if (spec.word.empty()) {
            value = 1.0;
        } else if (vanishing_reason(spec.word) == Vanishing::none) {
            value = continuous_moment_exact(spec);
        }
        doc.rows.push_back({mode, {}, value, {}, rational_cell(exact_limit(spec)), note});
        break;
    }
    case Mode::finite:
        for (int N : require_ns(c)) {
            doc.rows.push_back({mode, std::int64_t{N}, finite_moment(spec, N), {},
                                rational_cell(exact_finite_moment(spec, N)), note});
        }
        break;
    case Mode::mc: {
        const MonteCarloOptions opts = mc_options(c);
        if (vanishing_reason(spec.word) != Vanishing::none || spec.word.empty()) {
            const Complex value = spec.word.empty() ? Complex{1.0} : Complex{};
            doc.rows.push_back({mode, {}, value, 0.0, {}, note});
        } else {
            const auto est = continuous_moment_mc(spec, opts.samples, opts.seed);
            doc.rows.push_back({mode, {}, est.estimate, est.std_error, {}, note});
        }
        break;
    }
    }
    return doc;
}

Document cmd_converge(const RunConfig& c)
{
    const MomentSpec spec(c.sign_word(), c.letter_functions(), c.order);
    const auto ns = require_ns(c);
    const ConvergenceStudy study = convergence_study(spec, ns);
    Document doc = start(c, {"N", "value", "limit", "abs_error", "exact"});
    for (const auto& pt : study.points) {
        doc.rows.push_back({std::int64_t{pt.N}, pt.value, study.limit, pt.abs_error, rational_cell(pt.exact_value)});
    }
    return doc;
}

Document cmd_arcsine(const RunConfig& c)
{
    if (!c.max_order) {
        throw ConfigError("arcsine needs --max-order");
    }
    const int max_order = *c.max_order;
    if (max_order < 0 || max_order > max_arcsine_order) {
        throw ConfigError(fmt::format("max order must lie in 0..{}", max_arcsine_order));
    }
    std::vector<int> ns;
    if (!c.ns.empty()) {
        ns = require_ns(c);
    }
    std::vector<std::string> columns{"m"};
    for (int N : ns) {
        columns.push_back(fmt::format("N={}", N));
    }
    columns.push_back("limit");
    columns.push_back("exact");
    Document doc = start(c, std::move(columns));
    for (int m = 0; m <= max_order; ++m) {
        std::vector<Cell> row{std::int64_t{m}};
        for (int N : ns) {
            row.emplace_back(position_sum_moment(m, N, c.order));
        }
        row.emplace_back(arcsine_moment(m));
        row.emplace_back(monofock::to_string(arcsine_moment_exact(m)));
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

Document cmd_enumerate(const RunConfig& c)
{
    if (!c.n) {
        throw ConfigError("enumerate needs --n");
    }
    if (*c.n < 1 || *c.n > max_enumerate_n) {
        throw ConfigError(fmt::format("n must lie in 1..{}", max_enumerate_n));
    }
    Document doc = start(c, {"word", "partition"});
    for (const SignWord& w : enumerate_dyck_words(*c.n)) {
        doc.rows.push_back({w.to_string(), dyck_to_pair_partition(w).to_string()});
    }
    return doc;
}

Document cmd_invariance(const RunConfig& c)
{
    const ProcessMomentSpec spec(c.sign_word(), c.letter_functions(), c.letter_intervals(), c.order);
    const auto ns = require_ns(c);
    const bool exact = std::all_of(spec.functions.begin(), spec.functions.end(),
                                   [](const TestFunction& f) { return f.is_exactly_integrable(); });
    if (!exact && c.mode != Mode::mc) {
        throw UnsupportedRepresentationError("the exact invariance limit needs piecewise-constant functions; "
                                             "use --mode mc with a seed");
    }
    const MonteCarloOptions opts = exact ? MonteCarloOptions{} : mc_options(c);
    const Complex limit = invariance_limit(spec, opts);
    Document doc = start(c, {"N", "value", "limit", "abs_error"});
    for (int N : ns) {
        const Complex value = invariance_finite_moment(spec, N);
        doc.rows.push_back({std::int64_t{N}, value, limit, std::abs(value - limit)});
    }
    return doc;
}

Document execute(const RunConfig& c)
{
    if (!c.command) {
        throw ConfigError("no command given");
    }
    if (c.samples && *c.samples < 2) {
        throw ConfigError("samples must be at least 2");
    }
    switch (*c.command) {
    case Command::moment:
        return cmd_moment(c);
    case Command::converge:
        return cmd_converge(c);
    case Command::arcsine:
        return cmd_arcsine(c);
    case Command::enumerate:
        return cmd_enumerate(c);
    case Command::invariance:
        return cmd_invariance(c);
    }
    throw ConfigError("unknown command");
}

std::string render(const Document& doc, Format format)
{
    return format == Format::csv ? render_csv(doc) : render_json(doc);
}

} // namespace monofock::cli
