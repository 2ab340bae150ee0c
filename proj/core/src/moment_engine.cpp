#include "monofock/moment_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "monofock/errors.hpp"
#include "monofock/parallel.hpp"
#include "monofock/piecewise_polynomial.hpp"

namespace monofock {

MomentSpec::MomentSpec(SignWord w, std::vector<TestFunction> fs, Order o)
    : word(std::move(w)), functions(std::move(fs)), order(o)
{
    if (word.size() != functions.size()) {
        throw InvalidArgument("moment spec has " + std::to_string(word.size()) + " letters but " +
                              std::to_string(functions.size()) + " test functions");
    }
}

MomentSpec MomentSpec::unit_weights(SignWord w, Order o)
{
    const std::size_t m = w.size();
    return MomentSpec(std::move(w), std::vector<TestFunction>(m, TestFunction::constant(1.0)), o);
}

Vanishing vanishing_reason(const SignWord& word)
{
    if (word.size() % 2 != 0) {
        return Vanishing::odd_length;
    }
    return is_dyck_word(word) ? Vanishing::none : Vanishing::not_dyck;
}

std::string_view describe(Vanishing v)
{
    switch (v) {
    case Vanishing::odd_length: return "vanishing: odd length";
    case Vanishing::not_dyck: return "vanishing: not a Dyck word";
    case Vanishing::none: break;
    }
    return "";
}

int delta_factor(int rh, int rm, int kh, int km)
{
    return order_factor(Order::monotone, rh, rm, kh, km);
}

int nabla_factor(int rh, int rm, int kh, int km)
{
    return order_factor(Order::anti_monotone, rh, rm, kh, km);
}

int order_factor(Order order, int rh, int rm, int kh, int km)
{
    if (rh == rm) {
        throw InvalidArgument("order factor needs distinct right ends");
    }
    if (rm > rh) {
        return 1;
    }
    return precedes(order, km, kh) ? 1 : 0;
}

int delta_product(const PairPartition& p, std::span<const int> block_values, Order order)
{
    if (block_values.size() != static_cast<std::size_t>(p.size())) {
        throw InvalidArgument("delta product needs one mode per block");
    }
    if (!is_non_crossing(p)) {
        throw CrossingPartitionError("delta product of crossing partition " + p.to_string());
    }
    for (std::size_t h = 0; h < block_values.size(); ++h) {
        for (std::size_t m = h + 1; m < block_values.size(); ++m) {
            if (order_factor(order, p[h].right, p[m].right, block_values[h], block_values[m]) == 0) {
                return 0;
            }
        }
    }
    return 1;
}

int delta_product(const PairPartition& p, const PairMap& k, Order order)
{
    if (k.points() != static_cast<std::size_t>(p.points())) {
        throw InvalidArgument("pair map and partition differ in size");
    }
    std::vector<int> block_values;
    block_values.reserve(static_cast<std::size_t>(p.size()));
    for (const Block& b : p.blocks()) {
        if (k(b.left) != k(b.right)) {
            throw InvalidArgument("pair map does not respect the blocks of " + p.to_string());
        }
        block_values.push_back(k(b.right));
    }
    return delta_product(p, block_values, order);
}

int order_kernel(const PairPartition& p, std::span<const double> times, Order order)
{
    if (times.size() != static_cast<std::size_t>(p.size())) {
        throw InvalidArgument("order kernel needs one time per block");
    }
    for (std::size_t h = 0; h < times.size(); ++h) {
        for (std::size_t m = h + 1; m < times.size(); ++m) {
            if (p[m].right > p[h].right) {
                continue;
            }
            const bool before = order == Order::monotone ? times[m] < times[h] : times[m] > times[h];
            if (!before) {
                return 0;
            }
        }
    }
    return 1;
}

namespace {

std::int64_t checked_power(std::int64_t base, int exponent)
{
    std::int64_t result = 1;
    for (int i = 0; i < exponent; ++i) {
        if (result > std::numeric_limits<std::int64_t>::max() / base) {
            throw ResourceLimitError("N^n overflows 64-bit integers");
        }
        result *= base;
    }
    return result;
}

// Sum over block-constant assignments of prod_h weight_h(k_h) times the order constraints,
// organised along the enclosing-block forest: a block's value must come after the
// values of every block it encloses.
template <typename Scalar, typename BlockWeight>
Scalar forest_sum(const PairPartition& p, Order order, int N, BlockWeight block_weight)
{
    const auto parent = enclosing_blocks(p);
    const std::size_t n = static_cast<std::size_t>(p.size());
    const std::size_t modes = static_cast<std::size_t>(N);

    std::vector<std::vector<Scalar>> multiplier(n, std::vector<Scalar>(modes, Scalar{1}));
    Scalar result{1};
    // Enclosed blocks have larger indices, so walking backwards finishes children first.
    for (std::size_t h = n; h-- > 0;) {
        std::vector<Scalar>& d = multiplier[h];
        for (std::size_t k = 0; k < modes; ++k) {
            d[k] *= block_weight(h, static_cast<int>(k) + 1);
        }
        if (parent[h] < 0) {
            Scalar total{};
            for (const Scalar& x : d) {
                total += x;
            }
            result *= total;
            continue;
        }
        // Parent value k admits child values that precede it.
        std::vector<Scalar>& up = multiplier[static_cast<std::size_t>(parent[h])];
        Scalar running{};
        if (order == Order::monotone) {
            for (std::size_t k = 0; k < modes; ++k) {
                up[k] *= running;
                running += d[k];
            }
        } else {
            for (std::size_t k = modes; k-- > 0;) {
                up[k] *= running;
                running += d[k];
            }
        }
    }
    return result;
}

std::vector<std::size_t> block_letters(const PairPartition& p, bool left)
{
    std::vector<std::size_t> out;
    for (const Block& b : p.blocks()) {
        out.push_back(static_cast<std::size_t>((left ? b.left : b.right) - 1));
    }
    return out;
}

void require_positive_modes(int N)
{
    if (N < 1) {
        throw InvalidArgument("finite moment needs N >= 1");
    }
}

LetterWeight grid_weights(const MomentSpec& spec, int N)
{
    return [&spec, N](std::size_t letter, int mode) {
        return spec.functions[letter](static_cast<double>(mode) / static_cast<double>(N));
    };
}

} // namespace

Complex finite_moment(const SignWord& word, Order order, int N, const LetterWeight& weight)
{
    require_positive_modes(N);
    if (word.empty()) {
        return Complex{1.0, 0.0};
    }
    if (vanishing_reason(word) != Vanishing::none) {
        return Complex{};
    }
    const PairPartition p = dyck_to_pair_partition(word);
    const auto lefts = block_letters(p, true);
    const auto rights = block_letters(p, false);
    const Complex sum = forest_sum<Complex>(p, order, N, [&](std::size_t h, int k) {
        return std::conj(weight(lefts[h], k)) * weight(rights[h], k);
    });
    return sum / std::pow(static_cast<double>(N), p.size());
}

Complex finite_moment(const MomentSpec& spec, int N)
{
    return finite_moment(spec.word, spec.order, N, grid_weights(spec, N));
}

Complex finite_moment_by_maps(const MomentSpec& spec, int N)
{
    require_positive_modes(N);
    if (spec.word.empty()) {
        return Complex{1.0, 0.0};
    }
    if (vanishing_reason(spec.word) != Vanishing::none) {
        return Complex{};
    }
    const PairPartition p = dyck_to_pair_partition(spec.word);
    const std::size_t n = static_cast<std::size_t>(p.size());
    if (checked_power(N, p.size()) > 2'000'000'000) {
        throw ResourceLimitError("map enumeration limited to N^n <= 2e9");
    }
    const LetterWeight weight = grid_weights(spec, N);

    // Odometer over {1..N}^n in lexicographic order.
    std::vector<int> values(n, 1);
    Complex sum{};
    while (true) {
        if (delta_product(p, values, spec.order) != 0) {
            Complex term{1.0, 0.0};
            for (std::size_t h = 0; h < n; ++h) {
                const auto l = static_cast<std::size_t>(p[h].left - 1);
                const auto r = static_cast<std::size_t>(p[h].right - 1);
                term *= std::conj(weight(l, values[h])) * weight(r, values[h]);
            }
            sum += term;
        }
        std::size_t pos = n;
        while (pos > 0 && values[pos - 1] == N) {
            values[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) {
            break;
        }
        ++values[pos - 1];
    }
    return sum / std::pow(static_cast<double>(N), p.size());
}

std::int64_t admissible_assignment_count(const SignWord& word, int N, Order order)
{
    require_positive_modes(N);
    if (word.empty()) {
        return 1;
    }
    if (vanishing_reason(word) != Vanishing::none) {
        return 0;
    }
    const PairPartition p = dyck_to_pair_partition(word);
    checked_power(N, p.size()); // the count is bounded by N^n
    return forest_sum<std::int64_t>(p, order, N, [](std::size_t, int) { return std::int64_t{1}; });
}

Rational order_volume(const PairPartition& p)
{
    if (!is_non_crossing(p)) {
        throw CrossingPartitionError("order volume of crossing partition " + p.to_string());
    }
    // Block h encloses (r_h - l_h + 1)/2 blocks counting itself; hook-length formula for forests.
    Rational volume{1};
    for (const Block& b : p.blocks()) {
        volume *= Rational(2, b.right - b.left + 1);
    }
    return volume;
}

namespace {

std::optional<Rational> integer_constant_weight(const MomentSpec& spec)
{
    const PairPartition p = dyck_to_pair_partition(spec.word);
    Rational product{1};
    for (const Block& b : p.blocks()) {
        for (int position : {b.left, b.right}) {
            const auto* c = std::get_if<TestFunction::Constant>(
                &spec.functions[static_cast<std::size_t>(position - 1)].representation());
            if (c == nullptr || c->value.imag() != 0.0 || std::trunc(c->value.real()) != c->value.real() ||
                std::abs(c->value.real()) > 1e6) {
                return std::nullopt;
            }
            product *= static_cast<std::int64_t>(c->value.real());
        }
    }
    return product;
}

} // namespace

std::optional<Rational> exact_finite_moment(const MomentSpec& spec, int N)
{
    require_positive_modes(N);
    if (spec.word.empty()) {
        return Rational{1};
    }
    if (vanishing_reason(spec.word) != Vanishing::none) {
        return Rational{0};
    }
    const auto weight = integer_constant_weight(spec);
    if (!weight) {
        return std::nullopt;
    }
    const int n = static_cast<int>(spec.word.size() / 2);
    return *weight * Rational(admissible_assignment_count(spec.word, N, spec.order), checked_power(N, n));
}

std::optional<Rational> exact_limit(const MomentSpec& spec)
{
    if (spec.word.empty()) {
        return Rational{1};
    }
    if (vanishing_reason(spec.word) != Vanishing::none) {
        return Rational{0};
    }
    const auto weight = integer_constant_weight(spec);
    if (!weight) {
        return std::nullopt;
    }
    return *weight * order_volume(dyck_to_pair_partition(spec.word));
}

Complex continuous_moment_exact(const MomentSpec& spec)
{
    if (spec.word.empty()) {
        return Complex{1.0, 0.0};
    }
    if (!is_dyck_word(spec.word)) {
        throw InvalidWordError("exact continuous moment needs a Dyck word, got '" + spec.word.to_string() + "'");
    }
    for (const TestFunction& f : spec.functions) {
        if (!f.is_exactly_integrable()) {
            f.as_piecewise(); // throws UnsupportedRepresentationError
        }
    }
    const PairPartition p = dyck_to_pair_partition(spec.word);
    const auto parent = enclosing_blocks(p);
    const auto grid = common_grid(spec.functions);
    const std::size_t n = static_cast<std::size_t>(p.size());

    std::vector<PiecewisePolynomial> density;
    density.reserve(n);
    for (const Block& b : p.blocks()) {
        const TestFunction& annihilated = spec.functions[static_cast<std::size_t>(b.left - 1)];
        const TestFunction& created = spec.functions[static_cast<std::size_t>(b.right - 1)];
        const TestFunction conj_annihilated = [&] {
            auto pc = annihilated.as_piecewise();
            for (auto& v : pc.values) {
                v = std::conj(v);
            }
            return TestFunction::piecewise(std::move(pc.breakpoints), std::move(pc.values));
        }();
        density.push_back(PiecewisePolynomial::from_test_function(conj_annihilated, grid) *
                          PiecewisePolynomial::from_test_function(created, grid));
    }

    // A block's density is multiplied by the cumulative integral of each enclosed child's
    // density: over [0, t) for the monotone kernel, over (t, 1] for the anti-monotone one.
    Complex result{1.0, 0.0};
    for (std::size_t h = n; h-- > 0;) {
        if (parent[h] < 0) {
            result *= density[h].integral();
            continue;
        }
        const PiecewisePolynomial cumulative = spec.order == Order::monotone ? density[h].integral_from_left()
                                                                             : density[h].integral_from_right();
        density[static_cast<std::size_t>(parent[h])] *= cumulative;
    }
    return result;
}

namespace {

struct ChunkMoments {
    std::int64_t count = 0;
    Complex mean;
    double m2 = 0.0; // sum of |x - mean|^2
};

ChunkMoments merge(const ChunkMoments& a, const ChunkMoments& b)
{
    if (a.count == 0) {
        return b;
    }
    if (b.count == 0) {
        return a;
    }
    ChunkMoments out;
    out.count = a.count + b.count;
    const Complex delta = b.mean - a.mean;
    const double wb = static_cast<double>(b.count) / static_cast<double>(out.count);
    out.mean = a.mean + delta * wb;
    out.m2 = a.m2 + b.m2 + std::norm(delta) * static_cast<double>(a.count) * wb;
    return out;
}

constexpr std::int64_t mc_chunk_size = 16384;

} // namespace

MonteCarloEstimate continuous_moment_mc(const MomentSpec& spec, std::int64_t samples, std::uint64_t seed)
{
    if (samples < 1) {
        throw InvalidArgument("Monte Carlo needs at least one sample");
    }
    if (spec.word.empty()) {
        return {Complex{1.0, 0.0}, 0.0, samples};
    }
    if (!is_dyck_word(spec.word)) {
        throw InvalidWordError("Monte Carlo moment needs a Dyck word, got '" + spec.word.to_string() + "'");
    }
    const PairPartition p = dyck_to_pair_partition(spec.word);
    const std::size_t n = static_cast<std::size_t>(p.size());
    const std::size_t chunks = static_cast<std::size_t>((samples + mc_chunk_size - 1) / mc_chunk_size);

    // Each chunk owns a generator seeded from (seed, chunk index) so results do not depend
    // on scheduling; chunk statistics are merged in index order.
    const auto per_chunk = parallel_map<ChunkMoments>(chunks, [&](std::size_t c) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> uniform(0.0, 1.0);
        const std::int64_t first = static_cast<std::int64_t>(c) * mc_chunk_size;
        const std::int64_t count = std::min(mc_chunk_size, samples - first);

        ChunkMoments acc;
        std::vector<double> t(n);
        for (std::int64_t s = 0; s < count; ++s) {
            for (double& x : t) {
                x = uniform(rng);
            }
            Complex value{};
            if (order_kernel(p, t, spec.order) != 0) {
                value = Complex{1.0, 0.0};
                for (std::size_t h = 0; h < n; ++h) {
                    value *= std::conj(spec.functions[static_cast<std::size_t>(p[h].left - 1)](t[h])) *
                             spec.functions[static_cast<std::size_t>(p[h].right - 1)](t[h]);
                }
            }
            ++acc.count;
            const Complex delta = value - acc.mean;
            acc.mean += delta / static_cast<double>(acc.count);
            acc.m2 += std::real(std::conj(delta) * (value - acc.mean));
        }
        return acc;
    });

    ChunkMoments total;
    for (const ChunkMoments& c : per_chunk) {
        total = merge(total, c);
    }
    const double variance = total.count > 1 ? std::max(0.0, total.m2) / static_cast<double>(total.count - 1) : 0.0;
    return {total.mean, std::sqrt(variance / static_cast<double>(total.count)), total.count};
}

Complex mixed_vacuum_moment(const MomentSpec& spec, const MonteCarloOptions& mc)
{
    if (spec.word.empty()) {
        return Complex{1.0, 0.0};
    }
    if (vanishing_reason(spec.word) != Vanishing::none) {
        return Complex{};
    }
    const bool exact = std::all_of(spec.functions.begin(), spec.functions.end(),
                                   [](const TestFunction& f) { return f.is_exactly_integrable(); });
    if (exact) {
        return continuous_moment_exact(spec);
    }
    return continuous_moment_mc(spec, mc.samples, mc.seed).estimate;
}

Complex factorized_moment(const MomentSpec& spec, const MonteCarloOptions& mc)
{
    if (spec.word.empty()) {
        return Complex{1.0, 0.0};
    }
    if (vanishing_reason(spec.word) != Vanishing::none) {
        return Complex{};
    }
    const PairPartition p = dyck_to_pair_partition(spec.word);
    Complex product{1.0, 0.0};
    std::size_t offset = 0;
    for (const PairPartition& component : connected_components(p)) {
        const auto length = static_cast<std::size_t>(component.points());
        const auto first = spec.functions.begin() + static_cast<std::ptrdiff_t>(offset);
        MomentSpec part(spec.word.slice(offset, length),
                        std::vector<TestFunction>(first, first + static_cast<std::ptrdiff_t>(length)), spec.order);
        product *= mixed_vacuum_moment(part, mc);
        offset += length;
    }
    return product;
}

} // namespace monofock
