#include "monofock/piecewise_polynomial.hpp"

#include <algorithm>

#include "monofock/errors.hpp"

namespace monofock {

PiecewisePolynomial::PiecewisePolynomial(std::vector<double> grid) : grid_(std::move(grid))
{
    if (grid_.size() < 2 || grid_.front() != 0.0 || grid_.back() != 1.0) {
        throw InvalidArgument("piecewise polynomial grid must run from 0 to 1");
    }
    if (std::adjacent_find(grid_.begin(), grid_.end(), std::greater_equal<>()) != grid_.end()) {
        throw InvalidArgument("piecewise polynomial grid must be strictly increasing");
    }
    pieces_.assign(grid_.size() - 1, std::vector<Complex>{Complex{}});
}

PiecewisePolynomial PiecewisePolynomial::from_test_function(const TestFunction& f, std::vector<double> grid)
{
    if (!f.is_exactly_integrable()) {
        f.as_piecewise(); // throws the typed error
    }
    PiecewisePolynomial out(std::move(grid));
    for (const double jump : f.jump_points()) {
        if (!std::binary_search(out.grid_.begin(), out.grid_.end(), jump)) {
            throw InvalidArgument("grid does not refine the test function's breakpoints");
        }
    }
    for (std::size_t j = 0; j < out.pieces_.size(); ++j) {
        out.pieces_[j] = {f(0.5 * (out.grid_[j] + out.grid_[j + 1]))};
    }
    return out;
}

PiecewisePolynomial PiecewisePolynomial::constant(Complex value, std::vector<double> grid)
{
    PiecewisePolynomial out(std::move(grid));
    for (auto& p : out.pieces_) {
        p = {value};
    }
    return out;
}

int PiecewisePolynomial::degree() const
{
    std::size_t d = 0;
    for (const auto& p : pieces_) {
        d = std::max(d, p.size() - 1);
    }
    return static_cast<int>(d);
}

Complex PiecewisePolynomial::operator()(double t) const
{
    auto upper = std::upper_bound(grid_.begin(), grid_.end(), t);
    std::size_t cell = upper == grid_.begin() ? 0 : static_cast<std::size_t>(upper - grid_.begin()) - 1;
    cell = std::min(cell, pieces_.size() - 1);
    const double u = t - grid_[cell];
    Complex acc{};
    const auto& p = pieces_[cell];
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * u + *it;
    }
    return acc;
}

void PiecewisePolynomial::require_same_grid(const PiecewisePolynomial& other) const
{
    if (grid_ != other.grid_) {
        throw InvalidArgument("piecewise polynomials live on different grids");
    }
}

PiecewisePolynomial& PiecewisePolynomial::operator*=(const PiecewisePolynomial& other)
{
    require_same_grid(other);
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
        const auto& a = pieces_[j];
        const auto& b = other.pieces_[j];
        std::vector<Complex> c(a.size() + b.size() - 1);
        for (std::size_t x = 0; x < a.size(); ++x) {
            for (std::size_t y = 0; y < b.size(); ++y) {
                c[x + y] += a[x] * b[y];
            }
        }
        pieces_[j] = std::move(c);
    }
    return *this;
}

Complex PiecewisePolynomial::cell_integral(std::size_t cell) const
{
    const double width = grid_[cell + 1] - grid_[cell];
    const auto& p = pieces_[cell];
    Complex acc{};
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * width + p[i] / static_cast<double>(i + 1);
    }
    return acc * width;
}

Complex PiecewisePolynomial::integral() const
{
    Complex total{};
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
        total += cell_integral(j);
    }
    return total;
}

PiecewisePolynomial PiecewisePolynomial::integral_from_left() const
{
    PiecewisePolynomial out(grid_);
    Complex carried{};
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
        const auto& p = pieces_[j];
        std::vector<Complex> q(p.size() + 1);
        q[0] = carried;
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i + 1] = p[i] / static_cast<double>(i + 1);
        }
        out.pieces_[j] = std::move(q);
        carried += cell_integral(j);
    }
    return out;
}

PiecewisePolynomial PiecewisePolynomial::integral_from_right() const
{
    // integral over [t,1] = total - integral over [0,t]
    PiecewisePolynomial out = integral_from_left();
    const Complex total = integral();
    for (auto& q : out.pieces_) {
        for (auto& c : q) {
            c = -c;
        }
        q[0] += total;
    }
    return out;
}

std::vector<double> common_grid(std::span<const TestFunction> functions)
{
    std::vector<double> grid{0.0, 1.0};
    for (const TestFunction& f : functions) {
        const auto jumps = f.jump_points();
        grid.insert(grid.end(), jumps.begin(), jumps.end());
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

} // namespace monofock
