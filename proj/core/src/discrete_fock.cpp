#include "monofock/discrete_fock.hpp"

#include <algorithm>
#include <bit>

namespace monofock {

std::string_view to_string(Order o)
{
    return o == Order::monotone ? "monotone" : "anti";
}

Order parse_order(std::string_view text)
{
    if (text == "monotone" || text == "mono") {
        return Order::monotone;
    }
    if (text == "anti" || text == "anti-monotone" || text == "anti_monotone") {
        return Order::anti_monotone;
    }
    throw InvalidArgument("unknown order '" + std::string(text) + "', expected monotone or anti");
}

BasisVector::BasisVector(Order order, std::vector<int> modes) : order_(order), modes_(std::move(modes))
{
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        if (modes_[i] < 1) {
            throw InvalidArgument("basis modes start at 1");
        }
        if (i > 0 && !precedes(order_, modes_[i - 1], modes_[i])) {
            throw InvalidArgument("basis label " + to_string() + " is not strictly ordered for the " +
                                  std::string(monofock::to_string(order_)) + " space");
        }
    }
}

BasisVector BasisVector::prepended(int mode) const
{
    BasisVector out(order_);
    out.modes_.reserve(modes_.size() + 1);
    out.modes_.push_back(mode);
    out.modes_.insert(out.modes_.end(), modes_.begin(), modes_.end());
    return out;
}

BasisVector BasisVector::without_head() const
{
    BasisVector out(order_);
    out.modes_.assign(modes_.begin() + 1, modes_.end());
    return out;
}

std::string BasisVector::to_string() const
{
    if (modes_.empty()) {
        return "Omega";
    }
    std::string out = "e(";
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += std::to_string(modes_[i]);
    }
    out.push_back(')');
    return out;
}

std::vector<OperatorLetter> make_letters(const SignWord& word, std::span<const int> modes)
{
    if (word.size() != modes.size()) {
        throw InvalidArgument("sign word and mode list differ in length");
    }
    std::vector<OperatorLetter> letters;
    letters.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        letters.push_back(OperatorLetter::make(word[i], modes[i]));
    }
    return letters;
}

std::int64_t vacuum_expectation_direct(std::span<const OperatorLetter> word, Order order)
{
    return apply_word(word, FockVector::vacuum(order)).vacuum_amplitude();
}

std::vector<BasisVector> all_basis_vectors(Order order, int max_mode, int max_length)
{
    if (max_mode < 0 || max_length < 0) {
        throw InvalidArgument("probe basis bounds must be nonnegative");
    }
    // Each ordered label is a subset of 1..max_mode listed in the space's order.
    std::vector<BasisVector> out;
    const int limit = std::min(max_mode, 24);
    for (std::uint32_t mask = 0; mask < (1u << limit); ++mask) {
        if (std::popcount(mask) > max_length) {
            continue;
        }
        std::vector<int> modes;
        for (int bit = 0; bit < limit; ++bit) {
            if (mask & (1u << bit)) {
                modes.push_back(bit + 1);
            }
        }
        if (order == Order::anti_monotone) {
            std::reverse(modes.begin(), modes.end());
        }
        out.emplace_back(order, std::move(modes));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using Letters = std::vector<OperatorLetter>;

FockVector apply(const Letters& word, const BasisVector& e)
{
    return apply_word(std::span<const OperatorLetter>(word), FockVector::basis(e));
}

int largest_mode(std::span<const BasisVector> probes)
{
    int top = 0;
    for (const BasisVector& e : probes) {
        for (int mode : e.modes()) {
            top = std::max(top, mode);
        }
    }
    return top;
}

bool commutation_holds(int i, const BasisVector& e, int cap)
{
    const Order order = e.order();
    const FockVector lhs = apply({OperatorLetter::annihilator(i), OperatorLetter::creator(i)}, e);
    FockVector rhs = FockVector::basis(e);
    const int first = order == Order::monotone ? 1 : i;
    const int last = order == Order::monotone ? i : std::max(i, cap);
    for (int k = first; k <= last; ++k) {
        rhs -= apply({OperatorLetter::creator(k), OperatorLetter::annihilator(k)}, e);
    }
    return lhs == rhs;
}

} // namespace

bool verify_relations(int i, int j, std::span<const BasisVector> probes)
{
    if (i < 1 || j < 1) {
        throw InvalidArgument("operator modes start at 1");
    }
    const int cap = largest_mode(probes);
    for (const BasisVector& e : probes) {
        const Order order = e.order();
        if (!precedes(order, i, j)) {
            if (!apply({OperatorLetter::creator(i), OperatorLetter::creator(j)}, e).is_zero()) {
                return false;
            }
            if (!apply({OperatorLetter::annihilator(j), OperatorLetter::annihilator(i)}, e).is_zero()) {
                return false;
            }
        }
        if (i != j) {
            if (!apply({OperatorLetter::annihilator(i), OperatorLetter::creator(j)}, e).is_zero()) {
                return false;
            }
            if (!apply({OperatorLetter::annihilator(j), OperatorLetter::creator(i)}, e).is_zero()) {
                return false;
            }
        }
        if (!commutation_holds(i, e, cap) || !commutation_holds(j, e, cap)) {
            return false;
        }
    }
    return true;
}

bool verify_product_identities(int j, int h, int k, int m, std::span<const BasisVector> probes)
{
    for (int mode : {j, h, k, m}) {
        if (mode < 1) {
            throw InvalidArgument("operator modes start at 1");
        }
    }
    for (const BasisVector& e : probes) {
        const Order order = e.order();
        const auto a = OperatorLetter::annihilator;
        const auto c = OperatorLetter::creator;

        // The projection a_l a+_l onto labels whose head comes after l.
        const int l = order == Order::monotone ? std::max(j, k) : std::min(j, k);
        const FockVector first_lhs = apply({a(j), c(h), a(k), c(m)}, e);
        const FockVector first_rhs =
            (j == h && k == m) ? apply({a(l), c(l)}, e) : FockVector(order);
        if (first_lhs != first_rhs) {
            return false;
        }

        const FockVector second_lhs = apply({a(j), a(h), c(k), c(m)}, e);
        const bool nonzero = h == k && j == m && precedes(order, h, j);
        const FockVector second_rhs = nonzero ? apply({a(j), c(j)}, e) : FockVector(order);
        if (second_lhs != second_rhs) {
            return false;
        }
    }
    return true;
}

} // namespace monofock
