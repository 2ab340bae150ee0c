#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "monofock/errors.hpp"
#include "monofock/partitions.hpp"

namespace monofock {

// Which Fock space a basis label lives in: strictly increasing mode sequences
// (monotone) or strictly decreasing ones (anti-monotone).
enum class Order { monotone, anti_monotone };

constexpr Order opposite(Order o)
{
    return o == Order::monotone ? Order::anti_monotone : Order::monotone;
}

// True when `first` may sit directly in front of `second` in a basis label.
// This one predicate drives head insertion, the Delta/Nabla products and the
// direction of the continuous order kernels.
constexpr bool precedes(Order o, int first, int second)
{
    return o == Order::monotone ? first < second : first > second;
}

std::string_view to_string(Order o);
Order parse_order(std::string_view text);

// Label e_alpha of a basis vector; the empty sequence is the vacuum.
class BasisVector {
public:
    explicit BasisVector(Order order) : order_(order) {}
    BasisVector(Order order, std::vector<int> modes);

    static BasisVector vacuum(Order order) { return BasisVector(order); }

    Order order() const { return order_; }
    std::span<const int> modes() const { return modes_; }
    bool is_vacuum() const { return modes_.empty(); }
    std::size_t length() const { return modes_.size(); }
    int head() const { return modes_.front(); }

    // e_(i, alpha) if the order constraint against the head holds; otherwise empty.
    bool can_prepend(int mode) const { return modes_.empty() || precedes(order_, mode, modes_.front()); }
    BasisVector prepended(int mode) const;
    BasisVector without_head() const;

    std::string to_string() const;

    friend auto operator<=>(const BasisVector&, const BasisVector&) = default;

private:
    Order order_;
    std::vector<int> modes_;
};

struct OperatorLetter {
    Sign sign;
    int mode;

    static OperatorLetter creator(int mode) { return make(Sign::creator, mode); }
    static OperatorLetter annihilator(int mode) { return make(Sign::annihilator, mode); }
    static OperatorLetter make(Sign sign, int mode)
    {
        if (mode < 1) {
            throw InvalidArgument("operator modes start at 1, got " + std::to_string(mode));
        }
        return OperatorLetter{sign, mode};
    }

    friend bool operator==(const OperatorLetter&, const OperatorLetter&) = default;
};

// Letters a^{eps(j)}_{k_j} for a sign word and per-position modes.
std::vector<OperatorLetter> make_letters(const SignWord& word, std::span<const int> modes);

// Finite linear combination of basis vectors of one Fock space.
// Exact integer amplitudes are the default; the oracle paths depend on that.
template <typename Scalar = std::int64_t>
class BasicFockVector {
public:
    using scalar_type = Scalar;
    using term_map = std::map<BasisVector, Scalar>;

    explicit BasicFockVector(Order order) : order_(order) {}

    static BasicFockVector vacuum(Order order) { return basis(BasisVector::vacuum(order)); }
    static BasicFockVector basis(const BasisVector& e, Scalar amplitude = Scalar{1})
    {
        BasicFockVector v(e.order());
        v.add(e, amplitude);
        return v;
    }

    Order order() const { return order_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar amplitude(const BasisVector& e) const
    {
        const auto it = terms_.find(e);
        return it == terms_.end() ? Scalar{} : it->second;
    }
    Scalar vacuum_amplitude() const { return amplitude(BasisVector::vacuum(order_)); }

    void add(const BasisVector& e, Scalar amplitude)
    {
        if (e.order() != order_) {
            throw InvalidArgument("basis vector order does not match Fock vector order");
        }
        if (amplitude == Scalar{}) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(e, amplitude);
        if (!inserted) {
            it->second += amplitude;
            if (it->second == Scalar{}) {
                terms_.erase(it);
            }
        }
    }

    BasicFockVector& operator+=(const BasicFockVector& other)
    {
        for (const auto& [e, a] : other.terms_) {
            add(e, a);
        }
        return *this;
    }
    BasicFockVector& operator-=(const BasicFockVector& other)
    {
        for (const auto& [e, a] : other.terms_) {
            add(e, -a);
        }
        return *this;
    }
    friend BasicFockVector operator+(BasicFockVector a, const BasicFockVector& b) { return a += b; }
    friend BasicFockVector operator-(BasicFockVector a, const BasicFockVector& b) { return a -= b; }

    friend bool operator==(const BasicFockVector&, const BasicFockVector&) = default;

private:
    Order order_;
    term_map terms_;
};

using FockVector = BasicFockVector<std::int64_t>;
using ComplexFockVector = BasicFockVector<std::complex<double>>;

template <typename Scalar>
BasicFockVector<Scalar> creator_apply(int mode, const BasicFockVector<Scalar>& v)
{
    BasicFockVector<Scalar> out(v.order());
    for (const auto& [e, a] : v.terms()) {
        if (e.can_prepend(mode)) {
            out.add(e.prepended(mode), a);
        }
    }
    return out;
}

template <typename Scalar>
BasicFockVector<Scalar> annihilator_apply(int mode, const BasicFockVector<Scalar>& v)
{
    BasicFockVector<Scalar> out(v.order());
    for (const auto& [e, a] : v.terms()) {
        if (!e.is_vacuum() && e.head() == mode) {
            out.add(e.without_head(), a);
        }
    }
    return out;
}

template <typename Scalar>
BasicFockVector<Scalar> apply_letter(const OperatorLetter& letter, const BasicFockVector<Scalar>& v)
{
    return letter.sign == Sign::creator ? creator_apply(letter.mode, v) : annihilator_apply(letter.mode, v);
}

// Product a^{eps(1)}_{k_1} ... a^{eps(m)}_{k_m} applied to v: the rightmost letter acts first.
// The empty word is the identity.
template <typename Scalar>
BasicFockVector<Scalar> apply_word(std::span<const OperatorLetter> word, BasicFockVector<Scalar> v)
{
    for (auto it = word.rbegin(); it != word.rend() && !v.is_zero(); ++it) {
        v = apply_letter(*it, v);
    }
    return v;
}

// <Omega, word Omega>; always 0 or 1 for basis letters.
std::int64_t vacuum_expectation_direct(std::span<const OperatorLetter> word, Order order);

template <typename Scalar>
Scalar inner_product(const BasicFockVector<Scalar>& u, const BasicFockVector<Scalar>& v)
{
    Scalar sum{};
    for (const auto& [e, a] : u.terms()) {
        const auto b = v.amplitude(e);
        if constexpr (std::is_arithmetic_v<Scalar>) {
            sum += a * b;
        } else {
            sum += std::conj(a) * b;
        }
    }
    return sum;
}

template <typename Scalar>
double norm(const BasicFockVector<Scalar>& v)
{
    double sq = 0.0;
    for (const auto& [e, a] : v.terms()) {
        sq += static_cast<double>(std::norm(std::complex<double>(a)));
    }
    return std::sqrt(sq);
}

// Every ordered basis label with modes in 1..max_mode and length <= max_length,
// the vacuum included.
std::vector<BasisVector> all_basis_vectors(Order order, int max_mode, int max_length);

// Checks, on every probe, the product rules
//   a+_i a+_j = a_j a_i = 0 when i does not precede j,  a_i a+_j = 0 for i != j,
// and the commutation identity for i and for j:
//   monotone       a_i a+_i = I - sum_{k=1..i} a+_k a_k
//   anti-monotone  b_i b+_i = I - sum_{k>=i} b+_k b_k
// The anti-monotone sum is cut at the largest mode occurring in the probes, which is exact
// because higher annihilators kill every probe.
bool verify_relations(int i, int j, std::span<const BasisVector> probes);

// Four-letter identities on every probe:
//   a_j a+_h a_k a+_m = d(j,h) d(k,m) a_l a+_l,   l = max{j,k} (min for anti-monotone)
//   a_j a_h a+_k a+_m = d(h,k) d(j,m) [h precedes j] a_j a+_j
bool verify_product_identities(int j, int h, int k, int m, std::span<const BasisVector> probes);

} // namespace monofock
