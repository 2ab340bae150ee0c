#include <gtest/gtest.h>

#include "monofock/errors.hpp"
#include "monofock/piecewise_polynomial.hpp"
#include "monofock/test_function.hpp"

using namespace monofock;

TEST(TestFunction, PointEvaluation)
{
    EXPECT_EQ(TestFunction::constant({2.0, -1.0})(0.3), Complex(2.0, -1.0));

    const auto ind = TestFunction::indicator(0.25, 0.5);
    EXPECT_EQ(ind(0.25), Complex(1.0));
    EXPECT_EQ(ind(0.4), Complex(1.0));
    EXPECT_EQ(ind(0.5), Complex(0.0));
    EXPECT_EQ(ind(0.1), Complex(0.0));
    EXPECT_EQ(TestFunction::indicator(0.5, 1.0)(1.0), Complex(1.0));

    const auto pc = TestFunction::piecewise({0.0, 0.5, 1.0}, {Complex(1.0), Complex(0.0, 3.0)});
    EXPECT_EQ(pc(0.0), Complex(1.0));
    EXPECT_EQ(pc(0.5), Complex(0.0, 3.0));
    EXPECT_EQ(pc(1.0), Complex(0.0, 3.0));

    const auto poly = TestFunction::polynomial({1.0, 0.0, 2.0});
    EXPECT_DOUBLE_EQ(poly(0.5).real(), 1.5);
}

TEST(TestFunction, Validation)
{
    EXPECT_THROW(TestFunction::indicator(0.5, 0.5), InvalidArgument);
    EXPECT_THROW(TestFunction::indicator(-0.1, 0.5), InvalidArgument);
    EXPECT_THROW(TestFunction::indicator(0.2, 1.1), InvalidArgument);
    EXPECT_THROW(TestFunction::piecewise({0.0, 0.5}, {1.0}), InvalidArgument);
    EXPECT_THROW(TestFunction::piecewise({0.0, 0.6, 0.4, 1.0}, {1.0, 1.0, 1.0}), InvalidArgument);
    EXPECT_THROW(TestFunction::piecewise({0.0, 1.0}, {1.0, 2.0}), InvalidArgument);
}

TEST(TestFunction, ExactClass)
{
    EXPECT_TRUE(TestFunction::constant(1.0).is_exactly_integrable());
    EXPECT_TRUE(TestFunction::indicator(0.0, 0.5).is_exactly_integrable());
    EXPECT_FALSE(TestFunction::polynomial({1.0}).is_exactly_integrable());
    EXPECT_THROW(TestFunction::polynomial({1.0}).as_piecewise(), UnsupportedRepresentationError);
    EXPECT_THROW(TestFunction::opaque([](double t) { return Complex(t); }).as_piecewise(),
                 UnsupportedRepresentationError);
}

TEST(TestFunction, Restriction)
{
    const auto cut = TestFunction::constant(2.0).restricted_to(0.25, 0.75);
    EXPECT_TRUE(cut.is_exactly_integrable());
    EXPECT_EQ(cut(0.1), Complex(0.0));
    EXPECT_EQ(cut(0.5), Complex(2.0));
    EXPECT_EQ(cut(0.9), Complex(0.0));
    EXPECT_EQ(cut.jump_points(), (std::vector<double>{0.25, 0.75}));

    const auto poly_cut = TestFunction::polynomial({0.0, 1.0}).restricted_to(0.0, 0.5);
    EXPECT_FALSE(poly_cut.is_exactly_integrable());
    EXPECT_DOUBLE_EQ(poly_cut(0.25).real(), 0.25);
    EXPECT_EQ(poly_cut(0.75), Complex(0.0));
}

TEST(TestFunction, Reflection)
{
    const auto f = TestFunction::piecewise({0.0, 0.25, 1.0}, {Complex(1.0), Complex(5.0)});
    const auto g = f.reflected();
    for (double t : {0.1, 0.3, 0.6, 0.9}) {
        EXPECT_EQ(g(t), f(1.0 - t)) << t;
    }
}

TEST(PiecewisePolynomial, IntegratesExactly)
{
    const std::vector<double> grid{0.0, 0.5, 1.0};
    const auto f = PiecewisePolynomial::from_test_function(TestFunction::indicator(0.0, 0.5), grid);
    EXPECT_DOUBLE_EQ(f.integral().real(), 0.5);

    // int_0^t chi_[0,1/2) = min(t, 1/2)
    const auto left = f.integral_from_left();
    EXPECT_DOUBLE_EQ(left(0.25).real(), 0.25);
    EXPECT_DOUBLE_EQ(left(0.75).real(), 0.5);

    const auto right = f.integral_from_right();
    EXPECT_DOUBLE_EQ(right(0.25).real(), 0.25);
    EXPECT_DOUBLE_EQ(right(0.75).real(), 0.0);

    // int_0^1 (int_0^t 1)^2 dt = 1/3
    const auto one = PiecewisePolynomial::constant(1.0, grid);
    const auto t = one.integral_from_left();
    EXPECT_NEAR((t * t).integral().real(), 1.0 / 3.0, 1e-15);
    EXPECT_EQ((t * t).degree(), 2);
}

TEST(PiecewisePolynomial, RequiresRefiningGrid)
{
    EXPECT_THROW(PiecewisePolynomial::from_test_function(TestFunction::indicator(0.0, 0.3), {0.0, 0.5, 1.0}),
                 InvalidArgument);
    EXPECT_THROW(PiecewisePolynomial({0.0, 0.5}), InvalidArgument);
    const auto a = PiecewisePolynomial::constant(1.0, {0.0, 1.0});
    const auto b = PiecewisePolynomial::constant(1.0, {0.0, 0.5, 1.0});
    EXPECT_THROW(a * b, InvalidArgument);
}

TEST(PiecewisePolynomial, CommonGrid)
{
    const std::vector<TestFunction> fs{TestFunction::indicator(0.25, 0.5), TestFunction::constant(1.0),
                                       TestFunction::piecewise({0.0, 0.5, 0.75, 1.0}, {1.0, 2.0, 3.0})};
    EXPECT_EQ(common_grid(fs), (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
}
