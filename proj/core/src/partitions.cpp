#include "monofock/partitions.hpp"

#include <algorithm>
#include <numeric>

#include "monofock/errors.hpp"

namespace monofock {

SignWord SignWord::from_ints(std::span<const int> values)
{
    std::vector<Sign> signs;
    signs.reserve(values.size());
    for (int v : values) {
        if (v != -1 && v != 1) {
            throw InvalidArgument("sign word entries must be -1 or +1, got " + std::to_string(v));
        }
        signs.push_back(static_cast<Sign>(v));
    }
    return SignWord(std::move(signs));
}

SignWord SignWord::parse(std::string_view text)
{
    std::vector<Sign> signs;
    signs.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '-': signs.push_back(Sign::annihilator); break;
        case '+': signs.push_back(Sign::creator); break;
        default:
            throw InvalidArgument(std::string("sign word may only contain '-' and '+', got '") + c + "'");
        }
    }
    return SignWord(std::move(signs));
}

std::string SignWord::to_string() const
{
    std::string out;
    out.reserve(signs_.size());
    for (Sign s : signs_) {
        out.push_back(s == Sign::creator ? '+' : '-');
    }
    return out;
}

SignWord SignWord::slice(std::size_t first, std::size_t count) const
{
    if (first + count > signs_.size()) {
        throw InvalidArgument("sign word slice out of range");
    }
    const auto begin = signs_.begin() + static_cast<std::ptrdiff_t>(first);
    return SignWord(std::vector<Sign>(begin, begin + static_cast<std::ptrdiff_t>(count)));
}

PairPartition::PairPartition(std::vector<Block> blocks) : blocks_(std::move(blocks))
{
    if (blocks_.empty()) {
        throw InvalidArgument("a pair partition needs at least one block");
    }
    std::sort(blocks_.begin(), blocks_.end());
    const int two_n = points();
    std::vector<bool> seen(static_cast<std::size_t>(two_n) + 1, false);
    for (const Block& b : blocks_) {
        if (b.left >= b.right) {
            throw InvalidArgument("pair partition block must satisfy left < right");
        }
        for (int endpoint : {b.left, b.right}) {
            if (endpoint < 1 || endpoint > two_n) {
                throw InvalidArgument("pair partition endpoint " + std::to_string(endpoint) +
                                      " outside 1.." + std::to_string(two_n));
            }
            if (seen[static_cast<std::size_t>(endpoint)]) {
                throw InvalidArgument("pair partition endpoint " + std::to_string(endpoint) +
                                      " appears twice");
            }
            seen[static_cast<std::size_t>(endpoint)] = true;
        }
    }
}

int PairPartition::block_of(int position) const
{
    for (std::size_t h = 0; h < blocks_.size(); ++h) {
        if (blocks_[h].left == position || blocks_[h].right == position) {
            return static_cast<int>(h);
        }
    }
    throw InvalidArgument("position " + std::to_string(position) + " not covered by partition");
}

std::string PairPartition::to_string() const
{
    std::string out;
    for (const Block& b : blocks_) {
        if (!out.empty()) {
            out.push_back(' ');
        }
        out += "(" + std::to_string(b.left) + "," + std::to_string(b.right) + ")";
    }
    return out;
}

PairMap::PairMap(int modes, std::vector<int> values) : modes_(modes), values_(std::move(values))
{
    if (modes_ < 1) {
        throw InvalidArgument("pair map needs at least one mode");
    }
    if (values_.empty() || values_.size() % 2 != 0) {
        throw InvalidArgument("pair map must have an even, nonzero number of points");
    }
    std::vector<int> counts(static_cast<std::size_t>(modes_) + 1, 0);
    for (int v : values_) {
        if (v < 1 || v > modes_) {
            throw InvalidArgument("pair map value " + std::to_string(v) + " outside 1.." +
                                  std::to_string(modes_));
        }
        ++counts[static_cast<std::size_t>(v)];
    }
    for (int c : counts) {
        if (c != 0 && c != 2) {
            throw InvalidArgument("pair map is not 2-to-1");
        }
    }
}

bool is_dyck_word(const SignWord& w)
{
    if (w.size() % 2 != 0) {
        return false;
    }
    // Suffix sums from the right end must stay nonnegative and the total must vanish.
    int suffix = 0;
    for (std::size_t k = w.size(); k-- > 0;) {
        suffix += to_int(w[k]);
        if (suffix < 0) {
            return false;
        }
    }
    return suffix == 0;
}

namespace {

void extend_dyck(std::vector<Sign>& prefix, int open, int closed, int n, std::vector<SignWord>& out)
{
    if (closed == n) {
        out.emplace_back(prefix);
        return;
    }
    // Reading left to right, an annihilator opens a block and a creator closes one.
    if (open < n) {
        prefix.push_back(Sign::annihilator);
        extend_dyck(prefix, open + 1, closed, n, out);
        prefix.pop_back();
    }
    if (closed < open) {
        prefix.push_back(Sign::creator);
        extend_dyck(prefix, open, closed + 1, n, out);
        prefix.pop_back();
    }
}

void require_non_crossing(const PairPartition& p)
{
    if (!is_non_crossing(p)) {
        throw CrossingPartitionError("pair partition " + p.to_string() + " is crossing");
    }
}

} // namespace

std::vector<SignWord> enumerate_dyck_words(int n)
{
    if (n < 1) {
        throw InvalidArgument("Dyck word enumeration needs n >= 1");
    }
    if (n > max_dyck_half_length) {
        throw ResourceLimitError("Dyck word enumeration limited to n <= " +
                                 std::to_string(max_dyck_half_length));
    }
    std::vector<SignWord> out;
    out.reserve(static_cast<std::size_t>(catalan_number(n)));
    std::vector<Sign> prefix;
    prefix.reserve(static_cast<std::size_t>(2 * n));
    extend_dyck(prefix, 0, 0, n, out);
    return out;
}

PairPartition dyck_to_pair_partition(const SignWord& w)
{
    if (w.empty() || !is_dyck_word(w)) {
        throw InvalidWordError("'" + w.to_string() + "' is not a nonempty Dyck word");
    }
    // Repeatedly pairing the leftmost adjacent (-,+) is the same as matching each
    // creator with the nearest unmatched annihilator to its left.
    std::vector<Block> blocks;
    blocks.reserve(w.size() / 2);
    std::vector<int> open;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const int position = static_cast<int>(k) + 1;
        if (w[k] == Sign::annihilator) {
            open.push_back(position);
        } else {
            blocks.push_back({open.back(), position});
            open.pop_back();
        }
    }
    return PairPartition(std::move(blocks));
}

SignWord pair_partition_to_dyck(const PairPartition& p)
{
    require_non_crossing(p);
    std::vector<Sign> signs(static_cast<std::size_t>(p.points()), Sign::creator);
    for (const Block& b : p.blocks()) {
        signs[static_cast<std::size_t>(b.left - 1)] = Sign::annihilator;
    }
    return SignWord(std::move(signs));
}

bool is_non_crossing(const PairPartition& p)
{
    const auto blocks = p.blocks();
    for (std::size_t h = 0; h < blocks.size(); ++h) {
        for (std::size_t m = h + 1; m < blocks.size(); ++m) {
            // Canonical order gives l_h < l_m.
            if (blocks[m].left < blocks[h].right && blocks[h].right < blocks[m].right) {
                return false;
            }
        }
    }
    return true;
}

bool is_connected(const PairPartition& p)
{
    require_non_crossing(p);
    return p[0].left == 1 && p[0].right == p.points();
}

std::vector<PairPartition> connected_components(const PairPartition& p)
{
    require_non_crossing(p);
    std::vector<PairPartition> out;
    const auto blocks = p.blocks();
    std::size_t h = 0;
    while (h < blocks.size()) {
        // blocks[h] is outermost; its segment runs up to its right end.
        const int offset = blocks[h].left - 1;
        const int stop = blocks[h].right;
        std::vector<Block> segment;
        while (h < blocks.size() && blocks[h].left < stop) {
            segment.push_back({blocks[h].left - offset, blocks[h].right - offset});
            ++h;
        }
        out.emplace_back(std::move(segment));
    }
    return out;
}

namespace {

void extend_pairings(std::vector<int>& partner, std::vector<Block>& blocks, std::vector<PairPartition>& out)
{
    const auto first_free = std::find(partner.begin() + 1, partner.end(), 0);
    if (first_free == partner.end()) {
        out.emplace_back(blocks);
        return;
    }
    const int left = static_cast<int>(first_free - partner.begin());
    for (int right = left + 1; right < static_cast<int>(partner.size()); ++right) {
        if (partner[static_cast<std::size_t>(right)] != 0) {
            continue;
        }
        partner[static_cast<std::size_t>(left)] = right;
        partner[static_cast<std::size_t>(right)] = left;
        blocks.push_back({left, right});
        extend_pairings(partner, blocks, out);
        blocks.pop_back();
        partner[static_cast<std::size_t>(left)] = 0;
        partner[static_cast<std::size_t>(right)] = 0;
    }
}

} // namespace

std::vector<PairPartition> enumerate_pair_partitions(int two_n)
{
    if (two_n < 2 || two_n % 2 != 0) {
        throw InvalidArgument("pair partitions need an even positive number of points");
    }
    if (two_n > max_pair_partition_points) {
        throw ResourceLimitError("pair partition enumeration limited to 2n <= " +
                                 std::to_string(max_pair_partition_points));
    }
    std::vector<PairPartition> out;
    out.reserve(static_cast<std::size_t>(pair_partition_count(two_n)));
    std::vector<int> partner(static_cast<std::size_t>(two_n) + 1, 0);
    std::vector<Block> blocks;
    extend_pairings(partner, blocks, out);
    return out;
}

std::vector<int> enclosing_blocks(const PairPartition& p)
{
    require_non_crossing(p);
    std::vector<int> parent(static_cast<std::size_t>(p.size()), -1);
    std::vector<int> open;
    for (int h = 0; h < p.size(); ++h) {
        while (!open.empty() && p[static_cast<std::size_t>(open.back())].right < p[static_cast<std::size_t>(h)].left) {
            open.pop_back();
        }
        if (!open.empty()) {
            parent[static_cast<std::size_t>(h)] = open.back();
        }
        open.push_back(h);
    }
    return parent;
}

std::int64_t catalan_number(int n)
{
    if (n < 0) {
        throw InvalidArgument("Catalan number index must be nonnegative");
    }
    std::int64_t c = 1;
    for (int k = 0; k < n; ++k) {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    return c;
}

std::int64_t pair_partition_count(int two_n)
{
    if (two_n < 0 || two_n % 2 != 0) {
        throw InvalidArgument("pair partition count needs an even nonnegative size");
    }
    std::int64_t c = 1;
    for (int k = two_n - 1; k > 1; k -= 2) {
        c *= k;
    }
    return c;
}

PairMapEnumerator::PairMapEnumerator(PairPartition partition, int modes)
    : partition_(std::move(partition)), modes_(modes)
{
    if (modes_ < 1) {
        throw InvalidArgument("pair map enumeration needs N >= 1");
    }
}

PairMapEnumerator enumerate_pair_maps(const PairPartition& p, int modes)
{
    return PairMapEnumerator(p, modes);
}

PairMapEnumerator::iterator::iterator(const PairMapEnumerator* owner, bool done) : owner_(owner), done_(done)
{
    if (done_) {
        return;
    }
    const int n = owner_->partition_.size();
    if (owner_->modes_ < n) {
        done_ = true;
        return;
    }
    blocks_.resize(static_cast<std::size_t>(n));
    std::iota(blocks_.begin(), blocks_.end(), 1);
    used_.assign(static_cast<std::size_t>(owner_->modes_) + 1, false);
    for (int v : blocks_) {
        used_[static_cast<std::size_t>(v)] = true;
    }
    materialize();
}

PairMapEnumerator::iterator& PairMapEnumerator::iterator::operator++()
{
    const int modes = owner_->modes_;
    const std::size_t n = blocks_.size();
    for (std::size_t pos = n; pos-- > 0;) {
        used_[static_cast<std::size_t>(blocks_[pos])] = false;
        int next = blocks_[pos] + 1;
        while (next <= modes && used_[static_cast<std::size_t>(next)]) {
            ++next;
        }
        if (next > modes) {
            continue;
        }
        blocks_[pos] = next;
        used_[static_cast<std::size_t>(next)] = true;
        // Refill the tail with the smallest unused values.
        int candidate = 1;
        for (std::size_t tail = pos + 1; tail < n; ++tail) {
            while (used_[static_cast<std::size_t>(candidate)]) {
                ++candidate;
            }
            blocks_[tail] = candidate;
            used_[static_cast<std::size_t>(candidate)] = true;
        }
        materialize();
        return *this;
    }
    done_ = true;
    current_.reset();
    return *this;
}

void PairMapEnumerator::iterator::materialize()
{
    const PairPartition& p = owner_->partition_;
    std::vector<int> values(static_cast<std::size_t>(p.points()));
    for (std::size_t h = 0; h < blocks_.size(); ++h) {
        values[static_cast<std::size_t>(p[h].left - 1)] = blocks_[h];
        values[static_cast<std::size_t>(p[h].right - 1)] = blocks_[h];
    }
    current_.emplace(owner_->modes_, std::move(values));
}

} // namespace monofock
