#pragma once

#include "hindlab/coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

namespace hindlab {

/// One formal finite sum: the positions used and their ascending-order sum.
template <class T>
struct FsTerm {
    std::vector<std::size_t> positions;
    T sum;
};

/// Every nonempty subset of positions of `xs`, each summed in ascending index
/// order with `add`. Entries come in increasing subset-bitmask order; equal
/// sums from different position sets are all kept.
template <class T, class Add = std::plus<>>
std::vector<FsTerm<T>> fs_enumerate(std::span<const T> xs, Add add = {}) {
    if (xs.empty()) throw PreconditionError("fs_enumerate: empty sequence");
    if (xs.size() > 30) throw PreconditionError("fs_enumerate: more than 30 terms");
    const std::uint64_t n = xs.size();
    std::vector<FsTerm<T>> out;
    out.reserve((std::uint64_t{1} << n) - 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        FsTerm<T> term;
        std::optional<T> acc;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            term.positions.push_back(i);
            acc = acc ? T(add(*acc, xs[i])) : xs[i];
        }
        term.sum = std::move(*acc);
        out.push_back(std::move(term));
    }
    return out;
}

template <class T, class Add = std::plus<>>
std::vector<FsTerm<T>> fs_enumerate(const std::vector<T>& xs, Add add = {}) {
    return fs_enumerate(std::span<const T>(xs), add);
}

/// Finite sets of naturals with max(blocks[i]) < min(blocks[j]) for i < j.
class BlockSeq {
public:
    using Block = std::set<std::uint64_t>;

    explicit BlockSeq(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (blocks_[i].empty()) throw PreconditionError("block sequence contains an empty block");
            if (i > 0 && *blocks_[i - 1].rbegin() >= *blocks_[i].begin())
                throw PreconditionError("blocks are not increasing: max of block " +
                                        std::to_string(i - 1) + " >= min of block " +
                                        std::to_string(i));
        }
    }

    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    std::size_t size() const noexcept { return blocks_.size(); }

private:
    std::vector<Block> blocks_;
};

/// Unions of all nonempty subfamilies; exactly 2^|B| - 1 distinct sets.
inline std::set<BlockSeq::Block> fu_enumerate(const BlockSeq& b) {
    const auto& blocks = b.blocks();
    if (blocks.size() > 30) throw PreconditionError("fu_enumerate: more than 30 blocks");
    std::set<BlockSeq::Block> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << blocks.size()); ++mask) {
        BlockSeq::Block u;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (mask >> i & 1) u.insert(blocks[i].begin(), blocks[i].end());
        out.insert(std::move(u));
    }
    return out;
}

/// {a + b : a, b in M}, including a = b.
template <class T, class Add = std::plus<>>
std::set<T> pairwise_sumset(const std::set<T>& m, Add add = {}) {
    std::set<T> out;
    for (const auto& a : m)
        for (const auto& b : m) out.insert(add(a, b));
    return out;
}

/// The common colour of every element, or nullopt if two colours differ (or
/// the collection is empty). `color` is any callable element -> colour.
template <class Range, class ColorFn>
auto is_monochromatic_by(const Range& elems, ColorFn&& color)
    -> std::optional<std::decay_t<decltype(color(*std::begin(elems)))>> {
    using C = std::decay_t<decltype(color(*std::begin(elems)))>;
    std::optional<C> common;
    for (const auto& x : elems) {
        C c = color(x);
        if (!common) {
            common = std::move(c);
        } else if (!(*common == c)) {
            return std::nullopt;
        }
    }
    return common;
}

template <class Range>
std::optional<ColorValue> is_monochromatic(const Range& elems, const ColoringSpec& spec) {
    return is_monochromatic_by(elems, [&](const auto& x) { return evaluate(spec, x); });
}

}  // namespace hindlab
