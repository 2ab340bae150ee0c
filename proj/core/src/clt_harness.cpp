#include "monofock/clt_harness.hpp"

#include <algorithm>
#include <cmath>

#include "monofock/errors.hpp"
#include "monofock/parallel.hpp"
#include "monofock/piecewise_polynomial.hpp"

namespace monofock {

namespace {

void require_grid(std::span<const int> Ns)
{
    if (Ns.empty()) {
        throw InvalidArgument("N grid must not be empty");
    }
    for (std::size_t i = 0; i < Ns.size(); ++i) {
        if (Ns[i] < 1) {
            throw InvalidArgument("N grid entries must be positive");
        }
        if (i > 0 && Ns[i] <= Ns[i - 1]) {
            throw InvalidArgument("N grid must be strictly increasing");
        }
    }
}

Complex exact_continuum_limit(const MomentSpec& spec)
{
    if (spec.word.empty()) {
        return Complex{1.0, 0.0};
    }
    if (vanishing_reason(spec.word) != Vanishing::none) {
        return Complex{};
    }
    return continuous_moment_exact(spec);
}

} // namespace

double ConvergenceStudy::rate_constant() const
{
    double c = 0.0;
    for (const ConvergencePoint& pt : points) {
        c = std::max(c, pt.abs_error * pt.N);
    }
    return c;
}

ConvergenceStudy convergence_study(const MomentSpec& spec, std::span<const int> Ns)
{
    require_grid(Ns);
    ConvergenceStudy study{spec, {}, exact_continuum_limit(spec), exact_limit(spec)};
    study.points.reserve(Ns.size());
    for (const int N : Ns) {
        ConvergencePoint pt;
        pt.N = N;
        pt.value = finite_moment(spec, N);
        pt.abs_error = std::abs(pt.value - study.limit);
        pt.exact_value = exact_finite_moment(spec, N);
        study.points.push_back(std::move(pt));
    }
    return study;
}

Rational arcsine_moment_exact(int m)
{
    if (m < 0) {
        throw InvalidArgument("moment order must be nonnegative");
    }
    if (m % 2 != 0) {
        return Rational{0};
    }
    // C(2n, n) / 2^n = (2n - 1)!! / n!
    Rational r{1};
    for (int k = 1; k <= m / 2; ++k) {
        r *= Rational(2 * k - 1, k);
    }
    return r;
}

double arcsine_moment(int m)
{
    return to_double(arcsine_moment_exact(m));
}

double arcsine_moment_by_dyck_sum(int m)
{
    if (m < 0) {
        throw InvalidArgument("moment order must be nonnegative");
    }
    if (m == 0) {
        return 1.0;
    }
    if (m % 2 != 0) {
        return 0.0;
    }
    double sum = 0.0;
    for (const SignWord& w : enumerate_dyck_words(m / 2)) {
        sum += continuous_moment_exact(MomentSpec::unit_weights(w)).real();
    }
    return sum;
}

double position_sum_moment(int m, int N, Order order)
{
    if (m < 0) {
        throw InvalidArgument("moment order must be nonnegative");
    }
    if (N < 1) {
        throw InvalidArgument("position sum needs N >= 1");
    }
    if (m == 0) {
        return 1.0;
    }
    if (m % 2 != 0) {
        return 0.0;
    }
    const auto words = enumerate_dyck_words(m / 2);
    const auto terms = parallel_map<double>(words.size(), [&](std::size_t i) {
        return finite_moment(MomentSpec::unit_weights(words[i], order), N).real();
    });
    double sum = 0.0;
    for (double t : terms) {
        sum += t;
    }
    return sum;
}

Rational position_sum_moment_exact(int m, int N, Order order)
{
    if (m < 0) {
        throw InvalidArgument("moment order must be nonnegative");
    }
    if (m == 0) {
        return Rational{1};
    }
    if (m % 2 != 0) {
        return Rational{0};
    }
    Rational sum{0};
    for (const SignWord& w : enumerate_dyck_words(m / 2)) {
        sum += *exact_finite_moment(MomentSpec::unit_weights(w, order), N);
    }
    return sum;
}

Interval::Interval(double s_, double t_) : s(s_), t(t_)
{
    if (!(s >= 0.0 && s < t && t <= 1.0)) {
        throw InvalidArgument("interval needs 0 <= s < t <= 1");
    }
}

int grid_floor(double x)
{
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x))) {
        return static_cast<int>(nearest);
    }
    return static_cast<int>(std::floor(x));
}

IndexRange snap_interval(const Interval& interval, int N)
{
    if (N < 1) {
        throw InvalidArgument("snapping needs N >= 1");
    }
    return {grid_floor(N * interval.s) + 1, grid_floor(N * interval.t)};
}

ProcessMomentSpec::ProcessMomentSpec(SignWord w, std::vector<TestFunction> fs, std::vector<Interval> is, Order o)
    : word(std::move(w)), functions(std::move(fs)), intervals(std::move(is)), order(o)
{
    if (functions.size() != word.size() || intervals.size() != word.size()) {
        throw InvalidArgument("process moment needs one test function and one interval per letter");
    }
}

Complex invariance_finite_moment(const ProcessMomentSpec& spec, int N)
{
    std::vector<IndexRange> ranges;
    ranges.reserve(spec.intervals.size());
    for (const Interval& iv : spec.intervals) {
        ranges.push_back(snap_interval(iv, N));
    }
    return finite_moment(spec.word, spec.order, N, [&](std::size_t letter, int k) {
        return ranges[letter].contains(k) ? spec.functions[letter](static_cast<double>(k) / N) : Complex{};
    });
}

Complex invariance_limit(const ProcessMomentSpec& spec, const MonteCarloOptions& mc)
{
    std::vector<TestFunction> cut;
    cut.reserve(spec.functions.size());
    for (std::size_t i = 0; i < spec.functions.size(); ++i) {
        cut.push_back(spec.functions[i].restricted_to(spec.intervals[i].s, spec.intervals[i].t));
    }
    return mixed_vacuum_moment(MomentSpec(spec.word, std::move(cut), spec.order), mc);
}

InvarianceStudy invariance_study(const ProcessMomentSpec& spec, std::span<const int> Ns)
{
    require_grid(Ns);
    InvarianceStudy study{{}, invariance_limit(spec)};
    for (const int N : Ns) {
        InvariancePoint pt;
        pt.N = N;
        pt.value = invariance_finite_moment(spec, N);
        pt.abs_error = std::abs(pt.value - study.limit);
        for (const Interval& iv : spec.intervals) {
            pt.ranges.push_back(snap_interval(iv, N));
        }
        study.points.push_back(std::move(pt));
    }
    return study;
}

Complex nested_riemann_sum(const TestFunction& f, std::span<const TestFunction> factors, NestedRange range, int N)
{
    if (N < 1) {
        throw InvalidArgument("Riemann sum needs N >= 1");
    }
    const auto modes = static_cast<std::size_t>(N);
    std::vector<Complex> product(modes, Complex{1.0, 0.0});
    for (const TestFunction& g : factors) {
        // Inclusive running sums of g(k/N) from the chosen end.
        Complex running{};
        if (range == NestedRange::lower) {
            for (std::size_t k = 0; k < modes; ++k) {
                running += g(static_cast<double>(k + 1) / N);
                product[k] *= running;
            }
        } else {
            for (std::size_t k = modes; k-- > 0;) {
                running += g(static_cast<double>(k + 1) / N);
                product[k] *= running;
            }
        }
    }
    Complex total{};
    for (std::size_t k = 0; k < modes; ++k) {
        total += f(static_cast<double>(k + 1) / N) * product[k];
    }
    return total / std::pow(static_cast<double>(N), static_cast<double>(factors.size() + 1));
}

Complex nested_integral(const TestFunction& f, std::span<const TestFunction> factors, NestedRange range)
{
    std::vector<TestFunction> all(factors.begin(), factors.end());
    all.push_back(f);
    const auto grid = common_grid(all);
    PiecewisePolynomial integrand = PiecewisePolynomial::from_test_function(f, grid);
    for (const TestFunction& g : factors) {
        const auto density = PiecewisePolynomial::from_test_function(g, grid);
        integrand *= range == NestedRange::lower ? density.integral_from_left() : density.integral_from_right();
    }
    return integrand.integral();
}

} // namespace monofock
