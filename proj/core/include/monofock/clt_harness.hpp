#pragma once

#include <optional>
#include <span>
#include <vector>

#include "monofock/moment_engine.hpp"

namespace monofock {

struct ConvergencePoint {
    int N = 0;
    Complex value;
    double abs_error = 0.0;
    std::optional<Rational> exact_value;
};

// Finite-N moments against the exact continuum limit.
struct ConvergenceStudy {
    MomentSpec spec;
    std::vector<ConvergencePoint> points;
    Complex limit;
    std::optional<Rational> exact_limit;

    // max_N N * |error|: the empirical constant C in |error| <= C / N.
    double rate_constant() const;
};

// Ns must be nonempty and strictly increasing. The limit always comes from the exact
// continuum path; test functions outside the exact class are rejected.
ConvergenceStudy convergence_study(const MomentSpec& spec, std::span<const int> Ns);

// Even moments C(2n, n) / 2^n of the arcsine law on [-sqrt 2, sqrt 2]; odd moments vanish.
Rational arcsine_moment_exact(int m);
double arcsine_moment(int m);

// Sum of the continuum moments over all Dyck words of length m with unit weights,
// computed through the exact integration path.
double arcsine_moment_by_dyck_sum(int m);

// omega(((1/sqrt N) sum_i s_i)^m) with s_i = a_i + a+_i: the sum of finite_moment over all
// Dyck words of length m with unit weights.
double position_sum_moment(int m, int N, Order order);
Rational position_sum_moment_exact(int m, int N, Order order);

struct Interval {
    double s;
    double t;

    Interval(double s_, double t_);
};

// Mode range {[Ns]+1, ..., [Nt]} selected by an interval; empty when last < first.
struct IndexRange {
    int first;
    int last;

    bool contains(int k) const { return k >= first && k <= last; }
};

// [x] = floor(x), with products within 1e-9 (relative) of an integer snapped to it so that
// N * 0.29 and friends do not lose a mode to rounding.
int grid_floor(double x);
IndexRange snap_interval(const Interval& interval, int N);

struct ProcessMomentSpec {
    SignWord word;
    std::vector<TestFunction> functions;
    std::vector<Interval> intervals;
    Order order = Order::monotone;

    ProcessMomentSpec(SignWord word, std::vector<TestFunction> functions, std::vector<Interval> intervals,
                      Order order = Order::monotone);
};

// omega(S_{N,[s_1,t_1]}^{eps(1)}(f_1) ... ) with each letter's mode sum over snap_interval(...).
Complex invariance_finite_moment(const ProcessMomentSpec& spec, int N);

// omega(a^{eps(1)}(f_1 chi_[s_1,t_1]) ... ).
Complex invariance_limit(const ProcessMomentSpec& spec, const MonteCarloOptions& mc = {});

struct InvariancePoint {
    int N = 0;
    Complex value;
    double abs_error = 0.0;
    std::vector<IndexRange> ranges;
};

struct InvarianceStudy {
    std::vector<InvariancePoint> points;
    Complex limit;
};

InvarianceStudy invariance_study(const ProcessMomentSpec& spec, std::span<const int> Ns);

// Which inner range the nested Riemann sums run over.
enum class NestedRange {
    upper, // k_1..k_n from k to N, limit over [t, 1]^n
    lower, // k_1..k_n from 1 to k, limit over [0, t]^n
};

// (1/N^{n+1}) sum_k f(k/N) sum_{k_1..k_n in range(k)} prod_i g_i(k_i/N),
// i.e. the discrete side with a product integrand F = g_1 x ... x g_n.
Complex nested_riemann_sum(const TestFunction& f, std::span<const TestFunction> factors, NestedRange range, int N);

// int_0^1 f(t) prod_i int_{range(t)} g_i, evaluated exactly.
Complex nested_integral(const TestFunction& f, std::span<const TestFunction> factors, NestedRange range);

} // namespace monofock
