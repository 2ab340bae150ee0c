#pragma once

#include <complex>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace monofock {

using Complex = std::complex<double>;

// A bounded complex function on [0,1], the weight attached to one operator letter.
//
// Constant, Indicator and PiecewiseConstant form the exactly integrable class.
// Indicators and cells are half-open [lo, hi), except that a cell ending at 1 also
// contains 1, so Indicator(0, 1) and Constant(1) agree at every point of [0,1].
class TestFunction {
public:
    struct Constant {
        Complex value;
    };
    struct Indicator {
        double lo;
        double hi;
    };
    struct PiecewiseConstant {
        // breakpoints[0] == 0, breakpoints.back() == 1, strictly increasing;
        // values[i] holds on [breakpoints[i], breakpoints[i + 1]).
        std::vector<double> breakpoints;
        std::vector<Complex> values;
    };
    struct Polynomial {
        // coefficients[i] multiplies t^i.
        std::vector<Complex> coefficients;
    };
    struct Opaque {
        std::function<Complex(double)> callable;
        std::string label;
    };

    using Representation = std::variant<Constant, Indicator, PiecewiseConstant, Polynomial, Opaque>;

    TestFunction() : rep_(Constant{Complex{1.0, 0.0}}) {}

    static TestFunction constant(Complex value);
    static TestFunction indicator(double lo, double hi);
    static TestFunction piecewise(std::vector<double> breakpoints, std::vector<Complex> values);
    static TestFunction polynomial(std::vector<Complex> coefficients);
    static TestFunction opaque(std::function<Complex(double)> callable, std::string label = "opaque");

    Complex operator()(double t) const;

    const Representation& representation() const { return rep_; }

    bool is_constant() const { return std::holds_alternative<Constant>(rep_); }
    // Constant, Indicator or PiecewiseConstant.
    bool is_exactly_integrable() const;

    // Breakpoints in (0,1) where the function may jump; empty for constants.
    std::vector<double> jump_points() const;

    // Normal form of an exactly integrable function; throws UnsupportedRepresentationError otherwise.
    PiecewiseConstant as_piecewise() const;

    // f * chi_[s,t]. Stays in the exact class when f is in it.
    TestFunction restricted_to(double s, double t) const;

    // t -> f(1 - t).
    TestFunction reflected() const;

    std::string kind() const;

private:
    explicit TestFunction(Representation rep) : rep_(std::move(rep)) {}

    Representation rep_;
};

} // namespace monofock
