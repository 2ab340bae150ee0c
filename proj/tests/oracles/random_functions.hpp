#pragma once

#include <random>
#include <vector>

#include "monofock/test_function.hpp"

namespace monofock::testing_support {

// Piecewise-constant function with random dyadic breakpoints (multiples of 1/8) and
// complex values in [-1,1] x [-1,1]; occasionally a constant or an indicator.
inline TestFunction random_piecewise(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> kind(0, 5);
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    std::uniform_int_distribution<int> eighth(0, 8);
    switch (kind(rng)) {
    case 0:
        return TestFunction::constant({value(rng), value(rng)});
    case 1: {
        int lo = eighth(rng);
        int hi = eighth(rng);
        if (lo == hi) {
            hi = lo == 8 ? 0 : 8;
        }
        if (lo > hi) {
            std::swap(lo, hi);
        }
        return TestFunction::indicator(lo / 8.0, hi / 8.0);
    }
    default: {
        std::vector<double> breakpoints{0.0};
        for (int k = 1; k < 8; ++k) {
            if (std::bernoulli_distribution(0.35)(rng)) {
                breakpoints.push_back(k / 8.0);
            }
        }
        breakpoints.push_back(1.0);
        std::vector<Complex> values;
        for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
            values.emplace_back(value(rng), value(rng));
        }
        return TestFunction::piecewise(std::move(breakpoints), std::move(values));
    }
    }
}

inline std::vector<TestFunction> random_piecewise_tuple(std::mt19937_64& rng, std::size_t count)
{
    std::vector<TestFunction> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(random_piecewise(rng));
    }
    return out;
}

} // namespace monofock::testing_support
