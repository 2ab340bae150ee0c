#pragma once

// Test-only reference computations. Nothing here goes through the moment engine's
// evaluation paths; everything is expanded term by term.

#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "monofock/discrete_fock.hpp"
#include "monofock/moment_engine.hpp"
#include "monofock/partitions.hpp"

namespace monofock::oracle {

// Definition check: even length, zero total, nonnegative suffix sums.
inline bool is_dyck(const std::vector<int>& signs)
{
    if (signs.size() % 2 != 0) {
        return false;
    }
    for (std::size_t k = 0; k < signs.size(); ++k) {
        int suffix = 0;
        for (std::size_t j = k; j < signs.size(); ++j) {
            suffix += signs[j];
        }
        if (suffix < 0) {
            return false;
        }
    }
    int total = 0;
    for (int s : signs) {
        total += s;
    }
    return total == 0;
}

// All 2^m sign strings, in binary order with bit set = +1.
inline std::vector<std::vector<int>> all_sign_strings(int m)
{
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> s(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            s[static_cast<std::size_t>(i)] = (mask >> (m - 1 - i)) & 1u ? 1 : -1;
        }
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<std::vector<int>> dyck_by_filter(int n)
{
    std::vector<std::vector<int>> out;
    for (auto& s : all_sign_strings(2 * n)) {
        if (is_dyck(s)) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

// omega(S_N^{eps(1)}(f_1) ... S_N^{eps(m)}(f_m)) by expanding all N^m letter choices and
// running each basis word through the sparse Fock simulation.
inline Complex expanded_moment(const MomentSpec& spec, int N)
{
    const std::size_t m = spec.word.size();
    if (m == 0) {
        return Complex{1.0, 0.0};
    }
    std::vector<int> modes(m, 1);
    Complex sum{};
    while (true) {
        const auto letters = make_letters(spec.word, modes);
        if (vacuum_expectation_direct(letters, spec.order) != 0) {
            Complex term{1.0, 0.0};
            for (std::size_t i = 0; i < m; ++i) {
                const Complex value = spec.functions[i](static_cast<double>(modes[i]) / N);
                term *= spec.word[i] == Sign::annihilator ? std::conj(value) : value;
            }
            sum += term;
        }
        std::size_t pos = m;
        while (pos > 0 && modes[pos - 1] == N) {
            modes[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) {
            break;
        }
        ++modes[pos - 1];
    }
    return sum / std::pow(static_cast<double>(N), static_cast<double>(m) / 2.0);
}

// Split points found by scanning prefix depth: a component ends wherever the running
// count of open blocks returns to zero.
inline std::vector<std::vector<Block>> components_by_depth_scan(const PairPartition& p)
{
    std::vector<int> delta(static_cast<std::size_t>(p.points()) + 1, 0);
    for (const Block& b : p.blocks()) {
        delta[static_cast<std::size_t>(b.left)] = 1;
        delta[static_cast<std::size_t>(b.right)] = -1;
    }
    std::vector<std::vector<Block>> out;
    int start = 1;
    int depth = 0;
    for (int pos = 1; pos <= p.points(); ++pos) {
        depth += delta[static_cast<std::size_t>(pos)];
        if (depth == 0) {
            std::vector<Block> segment;
            for (const Block& b : p.blocks()) {
                if (b.left >= start && b.right <= pos) {
                    segment.push_back({b.left - start + 1, b.right - start + 1});
                }
            }
            out.push_back(std::move(segment));
            start = pos + 1;
        }
    }
    return out;
}

// int_{-sqrt2}^{sqrt2} x^m / (pi sqrt(2 - x^2)) dx by tanh-sinh quadrature, which copes
// with the endpoint singularities of the density.
inline double arcsine_quadrature(int m)
{
    const double root2 = std::numbers::sqrt2;
    boost::math::quadrature::tanh_sinh<double> integrator;
    auto density = [m](double x, double complement) {
        // complement is the distance to the nearest endpoint, which keeps 2 - x^2 accurate.
        const double dist = complement != 0.0 ? std::abs(complement) : std::numbers::sqrt2 - std::abs(x);
        const double two_minus_x2 = dist * (2.0 * std::numbers::sqrt2 - dist);
        return std::pow(x, m) / (std::numbers::pi * std::sqrt(two_minus_x2));
    };
    return integrator.integrate(density, -root2, root2);
}

} // namespace monofock::oracle
