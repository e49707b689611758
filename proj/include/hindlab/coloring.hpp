#pragma once

#include "hindlab/qvec.hpp"
#include "hindlab/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace hindlab {

struct IntColor {
    long value = 0;
    friend auto operator<=>(const IntColor&, const IntColor&) = default;
};

struct RatColor {
    Rat value;
    friend bool operator==(const RatColor& a, const RatColor& b) { return a.value == b.value; }
    friend bool operator<(const RatColor& a, const RatColor& b) { return a.value < b.value; }
};

/// Dyadic exponent together with the sign of the coloured number.
struct PairColor {
    long exponent = 0;
    int sign = 0;
    friend auto operator<=>(const PairColor&, const PairColor&) = default;
};

/// Tagged colour. Two colours are equal only if tag and value agree.
using ColorValue = std::variant<IntColor, RatColor, PairColor>;

inline std::string to_string(const ColorValue& c) {
    struct V {
        std::string operator()(const IntColor& x) const { return std::to_string(x.value); }
        std::string operator()(const RatColor& x) const { return to_string(x.value); }
        std::string operator()(const PairColor& x) const {
            const char* s = x.sign > 0 ? "+1" : x.sign < 0 ? "-1" : "0";
            return "(" + std::to_string(x.exponent) + "," + s + ")";
        }
    };
    return std::visit(V{}, c);
}

// ---------------------------------------------------------------------------
// The colourings.

/// k on [2^k, 2^(k+1)), 0 at 0, -k on (-2^(k+1), -2^k].
inline IntColor dyadic_color(const Rat& r) {
    if (r == 0) return {0};
    const long k = dyadic_exponent(abs(r));
    return {r.sign() > 0 ? k : -k};
}

/// (dyadic exponent of |r|, sign r); (0, 0) at zero. Unlike dyadic_color,
/// equal colours force equal signs.
inline PairColor signed_dyadic_color(const Rat& r) {
    if (r == 0) return {0, 0};
    return {dyadic_exponent(abs(r)), r.sign()};
}

/// Parity of the dyadic exponent of |r| (0 at zero), as a residue in {0, 1}.
inline IntColor dyadic_parity_color(const Rat& r) {
    if (r == 0) return {0};
    const long k = dyadic_exponent(abs(r));
    return {((k % 2) + 2) % 2};
}

/// floor(log2 |supp v|) mod 2. Undefined for the zero vector.
inline IntColor support_parity_color(const QVec& v) {
    if (v.is_zero()) throw DomainError("support_parity_color: the zero vector has no colour");
    return {floor_log2(v.support_size()) % 2};
}

/// <v|v>.
inline RatColor self_inner_color(const QVec& v) { return {inner_product(v, v)}; }

// ---------------------------------------------------------------------------
// Named colourings.

enum class ColoringName { dyadic, signed_dyadic, dyadic_parity, support_parity, self_inner };

enum class PointKind { rational, vector };

struct ColoringInfo {
    ColoringName name;
    std::string_view id;
    PointKind domain;
};

inline constexpr std::array<ColoringInfo, 5> kColorings{{
    {ColoringName::dyadic, "dyadic", PointKind::rational},
    {ColoringName::signed_dyadic, "signed_dyadic", PointKind::rational},
    {ColoringName::dyadic_parity, "dyadic_parity", PointKind::rational},
    {ColoringName::support_parity, "support_parity", PointKind::vector},
    {ColoringName::self_inner, "self_inner", PointKind::vector},
}};

inline const ColoringInfo& info(ColoringName n) {
    for (const auto& i : kColorings)
        if (i.name == n) return i;
    throw DomainError("unknown colouring");
}

/// A colouring by name plus named parameters. None of the built-in colourings
/// takes parameters; the map is kept so that specs serialize uniformly.
struct ColoringSpec {
    ColoringName name = ColoringName::dyadic;
    std::map<std::string, Rat> parameters;

    PointKind domain() const { return info(name).domain; }
    friend bool operator==(const ColoringSpec&, const ColoringSpec&) = default;
};

using Point = std::variant<Rat, QVec>;

inline PointKind kind_of(const Point& p) {
    return std::holds_alternative<Rat>(p) ? PointKind::rational : PointKind::vector;
}

inline ColorValue evaluate(const ColoringSpec& spec, const Rat& r) {
    switch (spec.name) {
        case ColoringName::dyadic: return dyadic_color(r);
        case ColoringName::signed_dyadic: return signed_dyadic_color(r);
        case ColoringName::dyadic_parity: return dyadic_parity_color(r);
        default:
            throw DomainError("colouring '" + std::string(info(spec.name).id) +
                              "' is defined on vectors, got a rational");
    }
}

inline ColorValue evaluate(const ColoringSpec& spec, const QVec& v) {
    switch (spec.name) {
        case ColoringName::support_parity: return support_parity_color(v);
        case ColoringName::self_inner: return self_inner_color(v);
        default:
            throw DomainError("colouring '" + std::string(info(spec.name).id) +
                              "' is defined on rationals, got a vector");
    }
}

inline ColorValue evaluate(const ColoringSpec& spec, const Point& p) {
    return std::visit([&](const auto& x) { return evaluate(spec, x); }, p);
}

/// `name(param=value,...)`; parentheses are omitted when there are no parameters.
inline std::string to_string(const ColoringSpec& spec) {
    std::string s(info(spec.name).id);
    if (spec.parameters.empty()) return s;
    s += '(';
    bool first = true;
    for (const auto& [k, v] : spec.parameters) {
        if (!first) s += ',';
        first = false;
        s += k + "=" + to_string(v);
    }
    return s + ')';
}

inline ColoringSpec parse_coloring_spec(std::string_view text) {
    auto s = detail::trim(text);
    const auto open = s.find('(');
    const auto name = detail::trim(s.substr(0, open));
    ColoringSpec spec;
    bool known = false;
    for (const auto& i : kColorings)
        if (i.id == name) {
            spec.name = i.name;
            known = true;
        }
    if (!known) throw ParseError("unknown colouring '" + std::string(name) + "'");
    if (open == std::string_view::npos) return spec;
    if (s.back() != ')') throw ParseError("missing ')' in '" + std::string(text) + "'");
    auto body = detail::trim(s.substr(open + 1, s.size() - open - 2));
    while (!body.empty()) {
        const auto comma = body.find(',');
        const auto item = detail::trim(body.substr(0, comma));
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("parameter without '=' in '" + std::string(text) + "'");
        spec.parameters[std::string(detail::trim(item.substr(0, eq)))] = parse_rat(item.substr(eq + 1));
        if (comma == std::string_view::npos) break;
        body = detail::trim(body.substr(comma + 1));
    }
    if (!spec.parameters.empty())
        throw ParseError("colouring '" + std::string(name) + "' takes no parameter '" +
                         spec.parameters.begin()->first + "'");
    return spec;
}

}  // namespace hindlab
