#pragma once

#include "hindlab/certificate.hpp"
#include "hindlab/rational.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace hindlab {

template <class T>
using SetFamily = std::vector<std::set<T>>;

template <class T>
struct DeltaSystem {
    std::set<T> root;
    /// Positions of the members in the input family, ascending.
    std::vector<std::size_t> members;
};

/// Every pairwise intersection equals `root`.
template <class T>
bool verify_delta_system(const SetFamily<T>& d, const std::set<T>& root) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            std::set<T> meet;
            std::set_intersection(d[i].begin(), d[i].end(), d[j].begin(), d[j].end(),
                                  std::inserter(meet, meet.end()));
            if (meet != root) return false;
        }
    return true;
}

namespace detail {

template <class T>
using Tagged = std::vector<std::pair<std::size_t, std::set<T>>>;

/// p pairwise disjoint members, the input-order greedy pick first, then an
/// exhaustive search.
template <class T>
std::optional<std::vector<std::size_t>> disjoint_members(const Tagged<T>& items, std::size_t p) {
    std::vector<std::size_t> greedy;
    std::set<T> used;
    for (const auto& [idx, s] : items)
        if (std::none_of(s.begin(), s.end(), [&](const T& x) { return used.count(x) > 0; })) {
            greedy.push_back(idx);
            used.insert(s.begin(), s.end());
        }
    if (greedy.size() >= p) return greedy;

    std::vector<std::size_t> pick;
    std::map<T, int> taken;
    auto dfs = [&](auto&& self, std::size_t from) -> bool {
        if (pick.size() == p) return true;
        for (std::size_t i = from; i + (p - pick.size()) <= items.size(); ++i) {
            const auto& s = items[i].second;
            if (std::any_of(s.begin(), s.end(), [&](const T& x) { return taken[x] > 0; })) continue;
            for (const auto& x : s) ++taken[x];
            pick.push_back(i);
            if (self(self, i + 1)) return true;
            pick.pop_back();
            for (const auto& x : s) --taken[x];
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    std::vector<std::size_t> out;
    for (auto i : pick) out.push_back(items[i].first);
    return out;
}

template <class T>
std::optional<DeltaSystem<T>> extract_uniform(const Tagged<T>& items, std::size_t p) {
    if (items.size() < p) return std::nullopt;

    std::map<T, std::size_t> freq;
    for (const auto& [idx, s] : items)
        for (const auto& x : s) ++freq[x];
    // most frequent first, ties to the least element
    std::vector<std::pair<std::size_t, T>> order;
    for (const auto& [x, n] : freq)
        if (n >= p) order.emplace_back(n, x);
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    for (const auto& [n, r] : order) {
        Tagged<T> sub;
        for (const auto& [idx, s] : items)
            if (s.count(r)) {
                auto rest = s;
                rest.erase(r);
                sub.emplace_back(idx, std::move(rest));
            }
        if (auto found = extract_uniform(sub, p)) {
            found->root.insert(r);
            return found;
        }
    }

    auto members = disjoint_members(items, p);
    if (!members) return std::nullopt;
    return DeltaSystem<T>{{}, std::move(*members)};
}

}  // namespace detail

/// Finite form of the induction on member size: restrict to the most common
/// cardinality (ties to the smaller), then either fix an element lying in at
/// least p members and recurse on the remainders, or collect pairwise
/// disjoint members in input order. Elements are tried by decreasing
/// frequency and the disjoint case falls back to exhaustive search, so a
/// system of size p in that class is always found.
template <class T>
std::optional<DeltaSystem<T>> extract_delta_system(const SetFamily<T>& c, std::size_t p) {
    if (p < 1) throw PreconditionError("extract_delta_system: p must be at least 1");
    {
        std::set<std::set<T>> distinct(c.begin(), c.end());
        if (distinct.size() != c.size()) throw PreconditionError("set family has repeated members");
    }
    if (c.empty()) return std::nullopt;

    std::map<std::size_t, std::size_t> by_size;
    for (const auto& s : c) ++by_size[s.size()];
    std::size_t size = 0, count = 0;
    for (const auto& [sz, n] : by_size)
        if (n > count) {
            size = sz;
            count = n;
        }

    detail::Tagged<T> items;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].size() == size) items.emplace_back(i, c[i]);

    if (p == 1) return DeltaSystem<T>{{}, {items.front().first}};
    auto found = detail::extract_uniform(items, p);
    if (found) std::sort(found->members.begin(), found->members.end());
    return found;
}

template <class T>
SetFamily<T> members_of(const SetFamily<T>& c, const DeltaSystem<T>& d) {
    SetFamily<T> out;
    for (auto i : d.members) out.push_back(c.at(i));
    return out;
}

/// Integer elements when every token is an integer, otherwise strings.
struct ParsedFamily {
    bool numeric = true;
    SetFamily<long long> ints;
    SetFamily<std::string> strings;
};

/// One member per line, elements separated by whitespace; lines starting
/// with '#' are skipped and an empty line is the empty set.
inline ParsedFamily parse_set_family(std::string_view text) {
    ParsedFamily out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line.front() == '#') continue;
        std::istringstream words(line);
        std::set<std::string> s;
        for (std::string w; words >> w;) s.insert(w);
        out.strings.push_back(std::move(s));
    }
    for (const auto& s : out.strings)
        for (const auto& w : s) {
            std::size_t used = 0;
            try {
                (void)std::stoll(w, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != w.size()) out.numeric = false;
        }
    if (out.numeric) {
        for (const auto& s : out.strings) {
            std::set<long long> t;
            for (const auto& w : s) t.insert(std::stoll(w));
            out.ints.push_back(std::move(t));
        }
    }
    return out;
}

template <class T>
Certificate delta_certificate(const SetFamily<T>& c, std::size_t p) {
    const auto start = std::chrono::steady_clock::now();
    const auto d = extract_delta_system(c, p);
    Certificate cert;
    cert.claim = "delta-system";
    cert.parameters = {{"family_size", c.size()}, {"p", p}};
    cert.search_space = c.size();
    if (d) {
        cert.verdict = Verdict::witness;
        Json members = Json::array();
        for (auto i : d->members) members.push_back(c[i]);
        cert.payload = {{"root", d->root}, {"indices", d->members}, {"members", members}};
    } else {
        cert.verdict = Verdict::exhausted;
    }
    cert.elapsed_ms = elapsed_since(start);
    return cert;
}

}  // namespace hindlab
