#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "brute_force.hpp"
#include "monofock/errors.hpp"
#include "monofock/moment_engine.hpp"
#include "random_functions.hpp"

using namespace monofock;

namespace {

MomentSpec ones(std::string_view word, Order o = Order::monotone)
{
    return MomentSpec::unit_weights(SignWord::parse(word), o);
}

PairPartition pp(std::vector<Block> blocks)
{
    return PairPartition(std::move(blocks));
}

} // namespace

TEST(MomentSpec, LengthsMustMatch)
{
    EXPECT_THROW(MomentSpec(SignWord::parse("-+"), {TestFunction::constant(1.0)}), InvalidArgument);
}

TEST(DeltaFactor, Branches)
{
    EXPECT_EQ(delta_factor(2, 4, 7, 3), 1);
    EXPECT_EQ(delta_factor(4, 3, 5, 2), 1);
    EXPECT_EQ(delta_factor(4, 3, 2, 5), 0);
    EXPECT_EQ(nabla_factor(4, 3, 2, 5), 1);
    EXPECT_EQ(nabla_factor(4, 3, 5, 2), 0);
    EXPECT_THROW(delta_factor(3, 3, 1, 2), InvalidArgument);
}

TEST(DeltaProduct, Examples)
{
    EXPECT_EQ(delta_product(pp({{1, 2}}), PairMap(9, {7, 7}), Order::monotone), 1);
    const auto nested = pp({{1, 4}, {2, 3}});
    EXPECT_EQ(delta_product(nested, PairMap(3, {3, 1, 1, 3}), Order::monotone), 1);
    EXPECT_EQ(delta_product(nested, PairMap(3, {1, 3, 3, 1}), Order::monotone), 0);
    EXPECT_EQ(delta_product(nested, PairMap(3, {1, 3, 3, 1}), Order::anti_monotone), 1);
    EXPECT_THROW(delta_product(nested, PairMap(3, {1, 1, 3, 3}), Order::monotone), InvalidArgument);
    EXPECT_THROW(delta_product(pp({{1, 3}, {2, 4}}), PairMap(3, {1, 2, 1, 2}), Order::monotone),
                 CrossingPartitionError);
}

TEST(DeltaProduct, MatchesSimulationIncludingRepeatedModes)
{
    // Block-constant assignments with repeated values are not 2-to-1 maps, but the product
    // formula still reproduces the simulation on them.
    for (Order o : {Order::monotone, Order::anti_monotone}) {
        for (int n = 1; n <= 3; ++n) {
            for (const auto& w : enumerate_dyck_words(n)) {
                const auto p = dyck_to_pair_partition(w);
                std::vector<int> values(static_cast<std::size_t>(n), 1);
                while (true) {
                    std::vector<int> modes(static_cast<std::size_t>(2 * n));
                    for (std::size_t h = 0; h < values.size(); ++h) {
                        modes[static_cast<std::size_t>(p[h].left - 1)] = values[h];
                        modes[static_cast<std::size_t>(p[h].right - 1)] = values[h];
                    }
                    EXPECT_EQ(delta_product(p, values, o), vacuum_expectation_direct(make_letters(w, modes), o));
                    std::size_t pos = values.size();
                    while (pos > 0 && values[pos - 1] == 3) {
                        values[pos - 1] = 1;
                        --pos;
                    }
                    if (pos == 0) {
                        break;
                    }
                    ++values[pos - 1];
                }
            }
        }
    }
}

TEST(FiniteMoment, Examples)
{
    EXPECT_EQ(finite_moment(ones("-+"), 5), Complex(1.0));
    EXPECT_EQ(finite_moment(ones("--++"), 4), Complex(0.375));
    EXPECT_EQ(finite_moment(MomentSpec(SignWord::parse("-+-"), std::vector<TestFunction>(3)), 7), Complex(0.0));
    EXPECT_EQ(finite_moment(ones("+-"), 3), Complex(0.0));
    EXPECT_EQ(finite_moment(ones(""), 3), Complex(1.0));
    EXPECT_THROW(finite_moment(ones("-+"), 0), InvalidArgument);
}

TEST(FiniteMoment, ExactCounts)
{
    // (N-1)/(2N) for the nested pair.
    for (int N : {1, 2, 4, 16, 256}) {
        EXPECT_EQ(*exact_finite_moment(ones("--++"), N), Rational(N - 1, 2 * N));
        EXPECT_EQ(admissible_assignment_count(SignWord::parse("--++"), N, Order::anti_monotone),
                  std::int64_t{N} * (N - 1) / 2);
    }
    EXPECT_EQ(admissible_assignment_count(SignWord::parse("-+-+"), 4, Order::monotone), 16);
    EXPECT_FALSE(exact_finite_moment(MomentSpec(SignWord::parse("-+"), {TestFunction::constant(0.5),
                                                                         TestFunction::constant(1.0)}),
                                     3));
}

TEST(FiniteMoment, ThreeRoutesAgree)
{
    std::mt19937_64 rng(7);
    for (Order o : {Order::monotone, Order::anti_monotone}) {
        for (int m = 0; m <= 4; ++m) {
            for (const auto& s : oracle::all_sign_strings(m)) {
                const SignWord w = SignWord::from_ints(s);
                for (int N = 1; N <= 4; ++N) {
                    const MomentSpec spec(w, testing_support::random_piecewise_tuple(rng, w.size()), o);
                    const Complex expected = oracle::expanded_moment(spec, N);
                    EXPECT_LT(std::abs(finite_moment(spec, N) - expected), 1e-12) << w.to_string() << " N=" << N;
                    EXPECT_LT(std::abs(finite_moment_by_maps(spec, N) - expected), 1e-12);
                }
            }
        }
    }
}

TEST(ContinuousMoment, HandIntegrals)
{
    EXPECT_EQ(continuous_moment_exact(ones("-+")), Complex(1.0));
    EXPECT_DOUBLE_EQ(continuous_moment_exact(ones("--++")).real(), 0.5);
    EXPECT_DOUBLE_EQ(continuous_moment_exact(ones("-+-+")).real(), 1.0);
    EXPECT_DOUBLE_EQ(continuous_moment_exact(ones("--++", Order::anti_monotone)).real(), 0.5);
    EXPECT_NEAR(continuous_moment_exact(ones("---+++")).real(), 1.0 / 6.0, 1e-15);
    EXPECT_EQ(continuous_moment_exact(ones("")), Complex(1.0));
    EXPECT_THROW(continuous_moment_exact(ones("+-")), InvalidWordError);
}

TEST(ContinuousMoment, NonConstantHandIntegrals)
{
    // Outer block cut to [0, 1/2): int_0^{1/2} t dt = 1/8 (monotone), int_0^{1/2} (1 - t) dt = 3/8.
    std::vector<TestFunction> fs(4, TestFunction::constant(1.0));
    fs[0] = TestFunction::indicator(0.0, 0.5);
    EXPECT_NEAR(continuous_moment_exact(MomentSpec(SignWord::parse("--++"), fs)).real(), 0.125, 1e-15);
    EXPECT_NEAR(continuous_moment_exact(MomentSpec(SignWord::parse("--++"), fs, Order::anti_monotone)).real(), 0.375,
                1e-15);

    // The annihilated function enters conjugated.
    const Complex i{0.0, 1.0};
    const MomentSpec spec(SignWord::parse("-+"), {TestFunction::constant(i), TestFunction::constant(i)});
    EXPECT_EQ(continuous_moment_exact(spec), Complex(1.0));
    const MomentSpec spec2(SignWord::parse("-+"), {TestFunction::constant(1.0), TestFunction::constant(i)});
    EXPECT_EQ(continuous_moment_exact(spec2), i);
}

TEST(ContinuousMoment, RejectsInexactFunctions)
{
    const MomentSpec spec(SignWord::parse("-+"), {TestFunction::polynomial({0.0, 1.0}), TestFunction::constant(1.0)});
    EXPECT_THROW(continuous_moment_exact(spec), UnsupportedRepresentationError);
}

TEST(ContinuousMoment, HookLengthVolumes)
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto& w : enumerate_dyck_words(n)) {
            const double volume = to_double(order_volume(dyck_to_pair_partition(w)));
            for (Order o : {Order::monotone, Order::anti_monotone}) {
                EXPECT_NEAR(continuous_moment_exact(ones(w.to_string(), o)).real(), volume, 1e-14);
            }
        }
    }
    EXPECT_EQ(order_volume(pp({{1, 6}, {2, 3}, {4, 5}})), Rational(1, 3));
}

TEST(ContinuousMoment, MonteCarloExamples)
{
    const auto trivial = continuous_moment_mc(ones("-+"), 10000, 1);
    EXPECT_EQ(trivial.estimate, Complex(1.0));
    EXPECT_EQ(trivial.std_error, 0.0);

    const auto nested = continuous_moment_mc(ones("--++"), 100000, 2);
    EXPECT_LE(std::abs(nested.estimate - 0.5), 3 * nested.std_error);

    const auto chain = continuous_moment_mc(ones("---+++"), 100000, 3);
    EXPECT_LE(std::abs(chain.estimate - 1.0 / 6.0), 3 * chain.std_error);
}

TEST(ContinuousMoment, MonteCarloIsReproducible)
{
    const auto a = continuous_moment_mc(ones("--+-++"), 50000, 11);
    const auto b = continuous_moment_mc(ones("--+-++"), 50000, 11);
    EXPECT_EQ(a.estimate, b.estimate);
    EXPECT_EQ(a.std_error, b.std_error);
    const auto c = continuous_moment_mc(ones("--+-++"), 50000, 12);
    EXPECT_NE(a.estimate, c.estimate);
}

TEST(ContinuousMoment, MonteCarloConsistencyRegression)
{
    // 4-sigma agreement on a fixed suite; 99% or better expected.
    std::mt19937_64 rng(99);
    int inside = 0;
    int total = 0;
    for (int n = 1; n <= 3; ++n) {
        for (const auto& w : enumerate_dyck_words(n)) {
            for (Order o : {Order::monotone, Order::anti_monotone}) {
                const MomentSpec spec(w, testing_support::random_piecewise_tuple(rng, w.size()), o);
                const Complex exact = continuous_moment_exact(spec);
                for (std::uint64_t seed = 0; seed < 5; ++seed) {
                    const auto mc = continuous_moment_mc(spec, 20000, seed);
                    inside += std::abs(mc.estimate - exact) <= 4 * mc.std_error + 1e-15 ? 1 : 0;
                    ++total;
                }
            }
        }
    }
    EXPECT_GE(inside, static_cast<int>(0.99 * total));
}

TEST(ContinuousMoment, MonteCarloHandlesPolynomials)
{
    // int_0^1 t^2 dt = 1/3 with f(t) = t on both letters.
    const MomentSpec spec(SignWord::parse("-+"),
                          {TestFunction::polynomial({0.0, 1.0}), TestFunction::polynomial({0.0, 1.0})});
    const auto mc = continuous_moment_mc(spec, 200000, 5);
    EXPECT_LE(std::abs(mc.estimate - 1.0 / 3.0), 4 * mc.std_error);
    EXPECT_NEAR(mixed_vacuum_moment(spec).real(), 1.0 / 3.0, 0.01);
}

TEST(OrderKernel, ScaleInvariant)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 1; n <= 4; ++n) {
        for (const auto& w : enumerate_dyck_words(n)) {
            const auto p = dyck_to_pair_partition(w);
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<double> t(static_cast<std::size_t>(n));
                for (double& x : t) {
                    x = u(rng);
                }
                for (double c : {0.5, 2.0, 7.25}) {
                    std::vector<double> scaled = t;
                    for (double& x : scaled) {
                        x *= c;
                    }
                    for (Order o : {Order::monotone, Order::anti_monotone}) {
                        EXPECT_EQ(order_kernel(p, t, o), order_kernel(p, scaled, o));
                    }
                }
            }
        }
    }
}

TEST(MixedMoment, VanishingAndExamples)
{
    EXPECT_EQ(mixed_vacuum_moment(MomentSpec(SignWord::parse("-+-"), std::vector<TestFunction>(3))), Complex(0.0));
    EXPECT_EQ(mixed_vacuum_moment(ones("+-")), Complex(0.0));
    const auto half = TestFunction::indicator(0.0, 0.5);
    EXPECT_DOUBLE_EQ(mixed_vacuum_moment(MomentSpec(SignWord::parse("-+"), {half, half})).real(), 0.5);
    EXPECT_EQ(describe(vanishing_reason(SignWord::parse("-+-"))), "vanishing: odd length");
}

TEST(MixedMoment, VanishesExactlyOffDyckWords)
{
    std::mt19937_64 rng(5);
    for (int m = 1; m <= 6; ++m) {
        for (const auto& s : oracle::all_sign_strings(m)) {
            if (oracle::is_dyck(s)) {
                continue;
            }
            const SignWord w = SignWord::from_ints(s);
            for (Order o : {Order::monotone, Order::anti_monotone}) {
                const MomentSpec spec(w, testing_support::random_piecewise_tuple(rng, w.size()), o);
                EXPECT_EQ(mixed_vacuum_moment(spec), Complex(0.0));
                EXPECT_EQ(finite_moment(spec, 3), Complex(0.0));
            }
        }
    }
}

TEST(FactorizedMoment, Examples)
{
    EXPECT_DOUBLE_EQ(factorized_moment(ones("-+-+")).real(), 1.0);
    EXPECT_DOUBLE_EQ(factorized_moment(ones("--++-+")).real(), 0.5);
    EXPECT_DOUBLE_EQ(factorized_moment(ones("---+++")).real(), mixed_vacuum_moment(ones("---+++")).real());
}

TEST(FactorizedMoment, MatchesWholeMoment)
{
    std::mt19937_64 rng(17);
    for (int n = 1; n <= 3; ++n) {
        for (const auto& w : enumerate_dyck_words(n)) {
            for (int trial = 0; trial < 5; ++trial) {
                const MomentSpec spec(w, testing_support::random_piecewise_tuple(rng, w.size()));
                EXPECT_LT(std::abs(factorized_moment(spec) - mixed_vacuum_moment(spec)), 1e-12);
            }
        }
    }
}

TEST(Convergence, FiniteMomentsApproachLimit)
{
    std::mt19937_64 rng(23);
    for (const auto& w : enumerate_dyck_words(2)) {
        const MomentSpec spec(w, testing_support::random_piecewise_tuple(rng, w.size()));
        const Complex limit = continuous_moment_exact(spec);
        EXPECT_LT(std::abs(finite_moment(spec, 4096) - limit), 5e-3);
    }
}

TEST(ContinuousMoment, MonteCarloIndependentOfThreadCount)
{
    const auto spec = MomentSpec::unit_weights(SignWord::parse("--+-++"));
    ::setenv("MONOFOCK_THREADS", "1", 1);
    const auto one = continuous_moment_mc(spec, 100000, 21);
    ::setenv("MONOFOCK_THREADS", "5", 1);
    const auto five = continuous_moment_mc(spec, 100000, 21);
    ::unsetenv("MONOFOCK_THREADS");
    EXPECT_EQ(one.estimate, five.estimate);
    EXPECT_EQ(one.std_error, five.std_error);
    EXPECT_EQ(one.samples, five.samples);
}
