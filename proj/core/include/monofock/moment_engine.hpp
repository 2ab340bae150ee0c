#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "monofock/discrete_fock.hpp"
#include "monofock/partitions.hpp"
#include "monofock/rational.hpp"
#include "monofock/test_function.hpp"

namespace monofock {

// The monomial a^{eps(1)}(f_1) ... a^{eps(m)}(f_m) on one Fock space.
struct MomentSpec {
    SignWord word;
    std::vector<TestFunction> functions;
    Order order = Order::monotone;

    MomentSpec(SignWord word, std::vector<TestFunction> functions, Order order = Order::monotone);

    // Every letter weighted by the constant function 1.
    static MomentSpec unit_weights(SignWord word, Order order = Order::monotone);
};

enum class Vanishing { none, odd_length, not_dyck };

// Why a vacuum moment with this sign pattern is identically zero, if it is.
Vanishing vanishing_reason(const SignWord& word);
std::string_view describe(Vanishing v);

// Delta_{k_h,k_m}(r_h, r_m) = [r_m > r_h] + [r_h > r_m][k_h > k_m]
int delta_factor(int rh, int rm, int kh, int km);
// Nabla_{k_h,k_m}(r_h, r_m) = [r_m > r_h] + [r_h > r_m][k_m > k_h]
int nabla_factor(int rh, int rm, int kh, int km);
int order_factor(Order order, int rh, int rm, int kh, int km);

// Product of order factors over all block pairs h < m. `block_values[h]` is the mode
// carried by block h; values need not be distinct.
int delta_product(const PairPartition& p, std::span<const int> block_values, Order order);
// Same product for a 2-to-1 map; throws if k is not constant on p's blocks.
int delta_product(const PairPartition& p, const PairMap& k, Order order);

// Continuous kernel prod_{h<m} ([r_m > r_h] + [r_h > r_m] chi(t_m before t_h)), where
// "before" is t_m < t_h (monotone) or t_m > t_h (anti-monotone). Always 0 or 1.
int order_kernel(const PairPartition& p, std::span<const double> times, Order order);

// Weight of letter `letter` at mode k, before conjugation. Annihilator weights are
// conjugated by the engine.
using LetterWeight = std::function<Complex(std::size_t letter, int mode)>;

// omega(S_N^{eps(1)}(f_1) ... S_N^{eps(m)}(f_m)) with S_N^eps(f) = N^{-1/2} sum_k a^eps_k f(k/N).
// Exact finite-N value, evaluated as nested sums over the block forest in O(n N).
Complex finite_moment(const MomentSpec& spec, int N);
Complex finite_moment(const SignWord& word, Order order, int N, const LetterWeight& weight);

// The same value as a flat sum over every block-constant mode assignment k of
// delta_product(p, k) times the weights; O(N^n n^2). Kept as an independent route.
Complex finite_moment_by_maps(const MomentSpec& spec, int N);

// Number of block-constant assignments k in {1..N}^n with nonzero vacuum expectation.
std::int64_t admissible_assignment_count(const SignWord& word, int N, Order order);

// Volume of the order region {t : order_kernel(p, t) = 1} in [0,1]^n, equal for both
// orders: prod_h 2 / (r_h - l_h + 1).
Rational order_volume(const PairPartition& p);

// Exact rationals for words whose functions are all real integer constants.
std::optional<Rational> exact_finite_moment(const MomentSpec& spec, int N);
std::optional<Rational> exact_limit(const MomentSpec& spec);

// int_{[0,1]^n} order_kernel(t) prod_h conj(f_{l_h}(t_h)) f_{r_h}(t_h) dt for a Dyck word.
// Requires every function to be exactly integrable (UnsupportedRepresentationError otherwise).
// The empty word gives 1.
Complex continuous_moment_exact(const MomentSpec& spec);

struct MonteCarloEstimate {
    Complex estimate;
    double std_error = 0.0;
    std::int64_t samples = 0;
};

// Plain Monte Carlo over uniform samples of [0,1]^n; deterministic for a given seed and
// independent of the worker count.
MonteCarloEstimate continuous_moment_mc(const MomentSpec& spec, std::int64_t samples, std::uint64_t seed);

struct MonteCarloOptions {
    std::int64_t samples = 200000;
    std::uint64_t seed = 0;
};

// omega_Omega(a^{eps(1)}(f_1) ... a^{eps(m)}(f_m)): zero off Dyck words, exact when the
// functions allow it, Monte Carlo otherwise.
Complex mixed_vacuum_moment(const MomentSpec& spec, const MonteCarloOptions& mc = {});

// Product of mixed_vacuum_moment over the connected components of the word's partition.
Complex factorized_moment(const MomentSpec& spec, const MonteCarloOptions& mc = {});

} // namespace monofock
