#pragma once

#include "hindlab/coloring.hpp"
#include "hindlab/qvec.hpp"
#include "hindlab/rational.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>

namespace hindlab {

using Json = nlohmann::json;

enum class Verdict { witness, exhausted, counterexample, inconclusive };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::witness: return "witness";
        case Verdict::exhausted: return "exhausted";
        case Verdict::counterexample: return "counterexample";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

inline Verdict parse_verdict(std::string_view s) {
    for (auto v : {Verdict::witness, Verdict::exhausted, Verdict::counterexample, Verdict::inconclusive})
        if (to_string(v) == s) return v;
    throw ParseError("unknown verdict '" + std::string(s) + "'");
}

/// Outcome record of a search or construction. The payload carries enough to
/// re-check the verdict by direct evaluation (see verify.hpp).
struct Certificate {
    std::string claim;
    Json parameters = Json::object();
    Verdict verdict = Verdict::inconclusive;
    Json payload = Json::object();
    std::uint64_t search_space = 0;
    std::int64_t elapsed_ms = 0;
};

inline Json to_json(const Certificate& c) {
    return Json{{"claim", c.claim},
                {"parameters", c.parameters},
                {"verdict", std::string(to_string(c.verdict))},
                {"payload", c.payload},
                {"search_space", c.search_space},
                {"elapsed_ms", c.elapsed_ms}};
}

inline Certificate certificate_from_json(const Json& j) {
    Certificate c;
    c.claim = j.at("claim").get<std::string>();
    c.parameters = j.at("parameters");
    c.verdict = parse_verdict(j.at("verdict").get<std::string>());
    c.payload = j.at("payload");
    c.search_space = j.at("search_space").get<std::uint64_t>();
    c.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return c;
}

/// The serialized document. Keys are sorted, so equal certificates give equal bytes.
inline std::string to_text(const Certificate& c) { return to_json(c).dump(2) + "\n"; }

/// The serialized document with the timing field removed.
inline std::string to_text_untimed(const Certificate& c) {
    Json j = to_json(c);
    j.erase("elapsed_ms");
    return j.dump(2) + "\n";
}

/// Writes to a sibling temporary and renames it into place.
inline void write_certificate(const std::filesystem::path& path, const Certificate& c) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << to_text(c);
        if (!out.flush()) throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    std::filesystem::rename(tmp, path);
}

// Payload encodings.

inline Json color_to_json(const ColorValue& c) {
    struct V {
        Json operator()(const IntColor& x) const { return Json{{"int", x.value}}; }
        Json operator()(const RatColor& x) const { return Json{{"rat", to_string(x.value)}}; }
        Json operator()(const PairColor& x) const { return Json{{"pair", {x.exponent, x.sign}}}; }
    };
    return std::visit(V{}, c);
}

inline ColorValue color_from_json(const Json& j) {
    if (j.contains("int")) return IntColor{j.at("int").get<long>()};
    if (j.contains("rat")) return RatColor{parse_rat(j.at("rat").get<std::string>())};
    if (j.contains("pair")) return PairColor{j.at("pair").at(0).get<long>(), j.at("pair").at(1).get<int>()};
    throw ParseError("unrecognized colour encoding " + j.dump());
}

inline Json point_to_json(const Rat& r) { return to_string(r); }
inline Json point_to_json(const QVec& v) { return to_string(v); }

/// Milliseconds since `start`.
inline std::int64_t elapsed_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace hindlab
