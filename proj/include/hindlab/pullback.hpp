#pragma once

#include "hindlab/certificate.hpp"
#include "hindlab/coloring.hpp"
#include "hindlab/qvec.hpp"
#include "hindlab/search.hpp"

#include <array>
#include <chrono>
#include <optional>

namespace hindlab {

template <class C>
struct PullbackWitness {
    std::array<std::size_t, 3> triple;  // alpha < beta < gamma
    QVec v, w;
    C color;
};

inline QVec basis_difference(std::size_t to, std::size_t from) {
    QVec d = QVec::basis(to);
    d -= QVec::basis(from);
    return d;
}

/// Colours pairs by d({a, b}) = c(b_b - b_a) and takes the least homogeneous
/// triple a < b < g; then v = b_b - b_a and w = b_g - b_b have
/// c(v) = c(w) = c(v + w).
template <class ColorFn>
auto ramsey_pullback_fs(std::size_t kappa, ColorFn&& c)
    -> std::optional<PullbackWitness<std::decay_t<decltype(c(QVec{}))>>> {
    using C = std::decay_t<decltype(c(QVec{}))>;
    if (kappa < 3) throw PreconditionError("ramsey_pullback_fs: kappa must be at least 3");
    const auto triple =
        pair_ramsey_homogeneous(kappa, [&](std::size_t a, std::size_t b) { return c(basis_difference(b, a)); }, 3);
    if (!triple) return std::nullopt;
    const auto [a, b, g] = std::array<std::size_t, 3>{(*triple)[0], (*triple)[1], (*triple)[2]};
    PullbackWitness<C> out{{a, b, g}, basis_difference(b, a), basis_difference(g, b), c(basis_difference(b, a))};
    const C cw = c(out.w), cvw = c(out.v + out.w);
    if (!(cw == out.color) || !(cvw == out.color))
        throw std::logic_error("pullback witness failed to re-verify");
    return out;
}

inline Certificate ramsey_pullback_certificate(std::size_t kappa, const ColoringSpec& spec) {
    const auto start = std::chrono::steady_clock::now();
    if (spec.domain() != PointKind::vector) throw DomainError("pullback needs a colouring of vectors");
    const auto r = ramsey_pullback_fs(kappa, [&](const QVec& x) { return evaluate(spec, x); });
    Certificate cert;
    cert.claim = "ramsey-pullback";
    cert.parameters = {{"kappa", kappa}, {"coloring", to_string(spec)}};
    cert.search_space = kappa * (kappa - 1) / 2;
    if (r) {
        cert.verdict = Verdict::witness;
        cert.payload = {{"triple", r->triple},
                        {"v", to_string(r->v)},
                        {"w", to_string(r->w)},
                        {"v_plus_w", to_string(r->v + r->w)},
                        {"color", color_to_json(r->color)}};
    } else {
        cert.verdict = Verdict::exhausted;
    }
    cert.elapsed_ms = elapsed_since(start);
    return cert;
}

}  // namespace hindlab
