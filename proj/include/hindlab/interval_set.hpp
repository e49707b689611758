#pragma once

#include "hindlab/rational.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hindlab {

struct Interval {
    Rat lo, hi;
    bool lo_closed = false;
    bool hi_closed = false;

    bool contains(const Rat& x) const {
        const bool above = lo_closed ? x >= lo : x > lo;
        const bool below = hi_closed ? x <= hi : x < hi;
        return above && below;
    }
    bool has_interior() const { return lo < hi; }
    bool operator==(const Interval&) const = default;
};

/// Finite union of rational intervals minus a finite set of points.
class IntervalSet {
public:
    IntervalSet() = default;

    IntervalSet(std::vector<Interval> parts, std::set<Rat> excluded) : parts_(std::move(parts)) {
        for (const auto& p : parts_)
            if (p.lo > p.hi || (p.lo == p.hi && !(p.lo_closed && p.hi_closed)))
                throw PreconditionError("empty interval with endpoints " + to_string(p.lo) + ", " +
                                        to_string(p.hi));
        normalize();
        for (const auto& x : excluded)
            if (!in_union(x)) throw PreconditionError("excluded point " + to_string(x) + " outside the union");
        excluded_ = std::move(excluded);
    }

    const std::vector<Interval>& parts() const noexcept { return parts_; }
    const std::set<Rat>& excluded() const noexcept { return excluded_; }

    bool contains(const Rat& x) const { return in_union(x) && !excluded_.count(x); }

    bool has_interior() const {
        return std::any_of(parts_.begin(), parts_.end(), [](const Interval& p) { return p.has_interior(); });
    }

    /// x + s for every point of the set.
    IntervalSet translated(const Rat& s) const {
        IntervalSet out = *this;
        for (auto& p : out.parts_) {
            p.lo += s;
            p.hi += s;
        }
        out.excluded_.clear();
        for (const auto& x : excluded_) out.excluded_.insert(x + s);
        return out;
    }

    bool operator==(const IntervalSet&) const = default;

private:
    bool in_union(const Rat& x) const {
        return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& p) { return p.contains(x); });
    }

    void normalize() {
        std::sort(parts_.begin(), parts_.end(), [](const Interval& a, const Interval& b) {
            if (a.lo != b.lo) return a.lo < b.lo;
            return a.lo_closed && !b.lo_closed;
        });
        std::vector<Interval> merged;
        for (const auto& p : parts_) {
            if (!merged.empty()) {
                auto& q = merged.back();
                const bool touches = p.lo < q.hi || (p.lo == q.hi && (p.lo_closed || q.hi_closed));
                if (touches) {
                    if (p.hi > q.hi || (p.hi == q.hi && p.hi_closed)) {
                        q.hi_closed = p.hi == q.hi ? (q.hi_closed || p.hi_closed) : p.hi_closed;
                        q.hi = p.hi;
                    }
                    continue;
                }
            }
            merged.push_back(p);
        }
        parts_ = std::move(merged);
    }

    std::vector<Interval> parts_;
    std::set<Rat> excluded_;
};

inline std::string to_string(const Interval& p) {
    return std::string(p.lo_closed ? "[" : "(") + to_string(p.lo) + "," + to_string(p.hi) + (p.hi_closed ? "]" : ")");
}

/// `(a,b) ∪ [c,d) ∖ {p,q}`; the empty union prints as `∅`.
inline std::string to_string(const IntervalSet& s) {
    std::string out;
    for (const auto& p : s.parts()) {
        if (!out.empty()) out += " ∪ ";
        out += to_string(p);
    }
    if (out.empty()) out = "∅";
    if (!s.excluded().empty()) {
        out += " ∖ {";
        bool first = true;
        for (const auto& x : s.excluded()) {
            if (!first) out += ",";
            out += to_string(x);
            first = false;
        }
        out += "}";
    }
    return out;
}

/// Accepts the printed form, with `U` for `∪` and `\` for `∖` as ASCII spellings.
inline IntervalSet parse_interval_set(std::string_view text) {
    std::string s(text);
    auto replace_all = [&](std::string_view from, std::string_view to) {
        for (std::size_t at = 0; (at = s.find(from, at)) != std::string::npos; at += to.size())
            s.replace(at, from.size(), to);
    };
    replace_all("∪", "U");
    replace_all("∖", "\\");
    replace_all("∅", "");

    std::string head = s, tail;
    if (auto bs = s.find('\\'); bs != std::string::npos) {
        head = s.substr(0, bs);
        tail = s.substr(bs + 1);
    }

    std::vector<Interval> parts;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < head.size() && std::isspace(static_cast<unsigned char>(head[i]))) ++i;
    };
    for (;;) {
        skip_ws();
        if (i == head.size()) break;
        if (!parts.empty()) {
            if (head[i] != 'U') throw ParseError("interval set: expected union sign at '" + head.substr(i) + "'");
            ++i;
            skip_ws();
        }
        if (i == head.size() || (head[i] != '(' && head[i] != '['))
            throw ParseError("interval set: expected '(' or '[' in '" + std::string(text) + "'");
        Interval p;
        p.lo_closed = head[i] == '[';
        const auto close = head.find_first_of(")]", i);
        if (close == std::string::npos) throw ParseError("interval set: unterminated interval");
        const std::string body = head.substr(i + 1, close - i - 1);
        const auto comma = body.find(',');
        if (comma == std::string::npos) throw ParseError("interval set: interval needs two endpoints");
        p.lo = parse_rat(body.substr(0, comma));
        p.hi = parse_rat(body.substr(comma + 1));
        p.hi_closed = head[close] == ']';
        parts.push_back(std::move(p));
        i = close + 1;
    }

    std::set<Rat> excluded;
    if (!tail.empty() || s.find('\\') != std::string::npos) {
        const std::string t(detail::trim(tail));
        if (t.size() < 2 || t.front() != '{' || t.back() != '}')
            throw ParseError("interval set: excluded points must be written {p,q,...}");
        std::string body = t.substr(1, t.size() - 2);
        if (!detail::trim(body).empty()) {
            std::size_t from = 0;
            for (;;) {
                const auto comma = body.find(',', from);
                excluded.insert(parse_rat(body.substr(from, comma - from)));
                if (comma == std::string::npos) break;
                from = comma + 1;
            }
        }
    }
    try {
        return IntervalSet(std::move(parts), std::move(excluded));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("interval set: ") + e.what());
    }
}

}  // namespace hindlab
