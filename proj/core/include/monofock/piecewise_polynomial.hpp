#pragma once

#include <span>
#include <vector>

#include "monofock/test_function.hpp"

namespace monofock {

// A function on [0,1] that is a polynomial on each cell of a fixed grid.
// Cell j covers [grid[j], grid[j+1]) and its polynomial is stored in the local
// variable u = t - grid[j].
class PiecewisePolynomial {
public:
    // The zero function on `grid` (grid[0] == 0, grid.back() == 1, strictly increasing).
    explicit PiecewisePolynomial(std::vector<double> grid);

    // Samples an exactly integrable test function cell by cell; `grid` must refine its jumps.
    static PiecewisePolynomial from_test_function(const TestFunction& f, std::vector<double> grid);
    static PiecewisePolynomial constant(Complex value, std::vector<double> grid);

    std::span<const double> grid() const { return grid_; }
    std::size_t cells() const { return pieces_.size(); }
    std::span<const Complex> piece(std::size_t cell) const { return pieces_[cell]; }
    int degree() const;

    Complex operator()(double t) const;

    PiecewisePolynomial& operator*=(const PiecewisePolynomial& other);
    friend PiecewisePolynomial operator*(PiecewisePolynomial a, const PiecewisePolynomial& b) { return a *= b; }

    // t -> integral over [0, t].
    PiecewisePolynomial integral_from_left() const;
    // t -> integral over [t, 1].
    PiecewisePolynomial integral_from_right() const;
    Complex integral() const;

private:
    Complex cell_integral(std::size_t cell) const;
    void require_same_grid(const PiecewisePolynomial& other) const;

    std::vector<double> grid_;
    std::vector<std::vector<Complex>> pieces_;
};

// Sorted union of {0, 1} and the jump points of every function.
std::vector<double> common_grid(std::span<const TestFunction> functions);

} // namespace monofock
