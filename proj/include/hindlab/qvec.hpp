#pragma once

#include "hindlab/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hindlab {

using BasisIndex = std::uint64_t;

/// Finitely supported vector over the basis {b_0, b_1, ...} with rational
/// coefficients. Zero coefficients are never stored, so two vectors are equal
/// iff their entry maps are equal.
class QVec {
public:
    using Entries = std::map<BasisIndex, Rat>;

    QVec() = default;

    QVec(std::initializer_list<std::pair<const BasisIndex, Rat>> entries) {
        for (const auto& [i, q] : entries) add_to(i, q);
    }

    /// The basis vector b_i.
    static QVec basis(BasisIndex i) {
        QVec v;
        v.entries_.emplace(i, Rat(1));
        return v;
    }

    const Entries& entries() const noexcept { return entries_; }
    bool is_zero() const noexcept { return entries_.empty(); }
    std::size_t support_size() const noexcept { return entries_.size(); }

    Rat coefficient(BasisIndex i) const {
        const auto it = entries_.find(i);
        return it == entries_.end() ? Rat(0) : it->second;
    }

    /// Adds q to the coefficient of b_i, dropping the entry if it cancels.
    QVec& add_to(BasisIndex i, const Rat& q) {
        if (q == 0) return *this;
        auto [it, inserted] = entries_.try_emplace(i, q);
        if (!inserted) {
            it->second += q;
            if (it->second == 0) entries_.erase(it);
        }
        return *this;
    }

    QVec& operator+=(const QVec& o) {
        for (const auto& [i, q] : o.entries_) add_to(i, q);
        return *this;
    }
    QVec& operator-=(const QVec& o) {
        for (const auto& [i, q] : o.entries_) add_to(i, -q);
        return *this;
    }
    QVec& operator*=(const Rat& s) {
        if (s == 0) {
            entries_.clear();
            return *this;
        }
        for (auto& [i, q] : entries_) q *= s;
        return *this;
    }

    friend QVec operator+(QVec a, const QVec& b) { return a += b; }
    friend QVec operator-(QVec a, const QVec& b) { return a -= b; }
    friend QVec operator*(const Rat& s, QVec v) { return v *= s; }
    friend QVec operator-(QVec v) { return v *= Rat(-1); }

    friend bool operator==(const QVec& a, const QVec& b) { return a.entries_ == b.entries_; }

    /// Total order: lexicographic over the (index, coefficient) entry lists.
    friend bool operator<(const QVec& a, const QVec& b) { return a.entries_ < b.entries_; }

private:
    Entries entries_;
};

/// Nonzero coefficients listed by increasing basis index.
using Pattern = std::vector<Rat>;

/// Indices with nonzero coefficient.
inline std::set<BasisIndex> supp(const QVec& v) {
    std::set<BasisIndex> out;
    for (const auto& [i, q] : v.entries()) out.insert(out.end(), i);
    return out;
}

/// Distinct nonzero coefficient values.
inline std::set<Rat> coef(const QVec& v) {
    std::set<Rat> out;
    for (const auto& [i, q] : v.entries()) out.insert(q);
    return out;
}

inline Rat inner_product(const QVec& v, const QVec& w) {
    const auto& a = v.entries();
    const auto& b = w.entries();
    Rat sum = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (i->first < j->first) {
            ++i;
        } else if (j->first < i->first) {
            ++j;
        } else {
            sum += i->second * j->second;
            ++i;
            ++j;
        }
    }
    return sum;
}

inline Pattern pattern_of(const QVec& v) {
    Pattern p;
    p.reserve(v.support_size());
    for (const auto& [i, q] : v.entries()) p.push_back(q);
    return p;
}

/// `{index:num/den, ...}` with ascending indices; `{}` for zero.
inline std::string to_string(const QVec& v) {
    std::string s = "{";
    bool first = true;
    for (const auto& [i, q] : v.entries()) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(i);
        s += ':';
        s += to_string(q);
    }
    s += '}';
    return s;
}

inline std::string to_string(const Pattern& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += to_string(p[i]);
    }
    return s + ")";
}

/// Parses the `{index:rat, ...}` form. Repeated indices are summed; explicit
/// zero coefficients are accepted and dropped.
inline QVec parse_qvec(std::string_view text) {
    auto s = detail::trim(text);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw ParseError("vector must be written {index:coef, ...}: '" + std::string(text) + "'");
    s = detail::trim(s.substr(1, s.size() - 2));
    QVec v;
    while (!s.empty()) {
        const auto comma = s.find(',');
        const auto item = detail::trim(s.substr(0, comma));
        const auto colon = item.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("vector entry without ':' in '" + std::string(text) + "'");
        const BigInt idx = detail::parse_int(item.substr(0, colon), text);
        if (idx < 0) throw ParseError("negative basis index in '" + std::string(text) + "'");
        v.add_to(static_cast<BasisIndex>(idx), parse_rat(item.substr(colon + 1)));
        if (comma == std::string_view::npos) break;
        s = detail::trim(s.substr(comma + 1));
        if (s.empty()) throw ParseError("trailing ',' in '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace hindlab
