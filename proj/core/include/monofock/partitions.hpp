#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace monofock {

// Hard bounds on the enumerators; requests above them throw ResourceLimitError.
inline constexpr int max_dyck_half_length = 12;
inline constexpr int max_pair_partition_points = 16;

enum class Sign : std::int8_t { annihilator = -1, creator = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }

// Creator/annihilator pattern of a monomial, read left to right in operator order.
class SignWord {
public:
    SignWord() = default;
    explicit SignWord(std::vector<Sign> signs) : signs_(std::move(signs)) {}

    // Accepts only -1 and +1 entries.
    static SignWord from_ints(std::span<const int> values);
    static SignWord from_ints(std::initializer_list<int> values)
    {
        return from_ints(std::span<const int>(values.begin(), values.size()));
    }
    // Compact form: "--++" reads as (-1,-1,+1,+1).
    static SignWord parse(std::string_view text);

    std::string to_string() const;

    std::size_t size() const { return signs_.size(); }
    bool empty() const { return signs_.empty(); }
    Sign operator[](std::size_t i) const { return signs_[i]; }
    std::span<const Sign> signs() const { return signs_; }

    SignWord slice(std::size_t first, std::size_t count) const;

    friend auto operator<=>(const SignWord&, const SignWord&) = default;

private:
    std::vector<Sign> signs_;
};

// Positions are 1-based, matching operator order in a word of length 2n.
struct Block {
    int left = 0;
    int right = 0;

    friend auto operator<=>(const Block&, const Block&) = default;
};

// A pairing of {1..2n}. Blocks are always stored in canonical order (ascending left end).
class PairPartition {
public:
    explicit PairPartition(std::vector<Block> blocks);

    int size() const { return static_cast<int>(blocks_.size()); }
    int points() const { return 2 * size(); }
    std::span<const Block> blocks() const { return blocks_; }
    const Block& operator[](std::size_t h) const { return blocks_[h]; }

    // Index of the block containing a 1-based position.
    int block_of(int position) const;

    std::string to_string() const;

    friend auto operator<=>(const PairPartition&, const PairPartition&) = default;

private:
    std::vector<Block> blocks_;
};

// A 2-to-1 map k: {1..2n} -> {1..N}.
class PairMap {
public:
    PairMap(int modes, std::vector<int> values);

    int modes() const { return modes_; }
    std::size_t points() const { return values_.size(); }
    // k(position), position 1-based.
    int operator()(int position) const { return values_[static_cast<std::size_t>(position - 1)]; }
    std::span<const int> values() const { return values_; }

    friend auto operator<=>(const PairMap&, const PairMap&) = default;

private:
    int modes_;
    std::vector<int> values_;
};

bool is_dyck_word(const SignWord& w);
std::vector<SignWord> enumerate_dyck_words(int n);

PairPartition dyck_to_pair_partition(const SignWord& w);
SignWord pair_partition_to_dyck(const PairPartition& p);

bool is_non_crossing(const PairPartition& p);
bool is_connected(const PairPartition& p);
std::vector<PairPartition> connected_components(const PairPartition& p);

std::vector<PairPartition> enumerate_pair_partitions(int two_n);

// For each block h, the index of the innermost block strictly enclosing it, or -1.
// Requires a non-crossing partition.
std::vector<int> enclosing_blocks(const PairPartition& p);

std::int64_t catalan_number(int n);
std::int64_t pair_partition_count(int two_n);

// Lazily walks every k with k(l_h) = k(r_h) and pairwise-distinct block values,
// in lexicographic order of (k(r_1), ..., k(r_n)).
class PairMapEnumerator {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = PairMap;
        using difference_type = std::ptrdiff_t;
        using reference = const PairMap&;
        using pointer = const PairMap*;

        iterator() = default;

        reference operator*() const { return *current_; }
        pointer operator->() const { return &*current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& a, const iterator& b)
        {
            return a.owner_ == b.owner_ && a.done_ == b.done_ && (a.done_ || a.blocks_ == b.blocks_);
        }

    private:
        friend class PairMapEnumerator;
        iterator(const PairMapEnumerator* owner, bool done);
        void materialize();

        const PairMapEnumerator* owner_ = nullptr;
        bool done_ = true;
        std::vector<int> blocks_;
        std::vector<bool> used_;
        std::optional<PairMap> current_;
    };

    PairMapEnumerator(PairPartition partition, int modes);

    iterator begin() const { return iterator(this, false); }
    iterator end() const { return iterator(this, true); }

    const PairPartition& partition() const { return partition_; }
    int modes() const { return modes_; }

private:
    PairPartition partition_;
    int modes_;
};

PairMapEnumerator enumerate_pair_maps(const PairPartition& p, int modes);

} // namespace monofock
