#pragma once

#include "hindlab/certificate.hpp"
#include "hindlab/coloring.hpp"
#include "hindlab/qvec.hpp"

#include <chrono>
#include <cstdint>
#include <vector>

namespace hindlab {

struct SupportArithmetic {
    long N = 0, root = 0;
    int m = 0, n = 0;
    long L = 0;
    std::size_t expected_support = 0;
    std::size_t actual_support = 0;
    long member_color = 0, sum_color = 0;
    bool lower_chain = false, upper_chain = false;

    bool ok() const {
        return expected_support == actual_support && member_color != sum_color && lower_chain && upper_chain;
    }
};

/// Member i of a sunflower of QVecs with support size N: the root indices
/// 0..root-1 carry coefficient 1, and petal i is the block of N - root
/// indices starting at root + i * (N - root), with coefficients 1, 2, ...
inline QVec sunflower_member(long N, long root, long i) {
    QVec v;
    for (long j = 0; j < root; ++j) v.add_to(static_cast<BasisIndex>(j), Rat(1));
    const long petal = N - root;
    for (long j = 0; j < petal; ++j) v.add_to(static_cast<BasisIndex>(root + i * petal + j), Rat(j + 1));
    return v;
}

inline SupportArithmetic support_arithmetic(long N, long root) {
    if (root < 1 || root >= N)
        throw PreconditionError("support arithmetic needs 1 <= root size < N (got N=" + std::to_string(N) +
                                ", root size=" + std::to_string(root) + ")");
    SupportArithmetic s;
    s.N = N;
    s.root = root;
    s.m = floor_log2(static_cast<std::uint64_t>(N));
    s.n = floor_log2(static_cast<std::uint64_t>(N - root));
    s.L = (long{1} << (s.m - s.n)) + 1;
    s.expected_support = static_cast<std::size_t>(root + s.L * (N - root));

    QVec sum;
    for (long i = 0; i < s.L; ++i) sum += sunflower_member(N, root, i);
    s.actual_support = sum.support_size();

    const auto first = sunflower_member(N, root, 0);
    s.member_color = support_parity_color(first).value;
    s.sum_color = support_parity_color(sum).value;

    const long middle = (long{1} << (s.m - s.n)) * (N - root) + N;
    s.lower_chain = (long{1} << (s.m + 1)) <= middle;
    s.upper_chain = middle < (long{1} << (s.m + 2));
    return s;
}

inline Json to_json(const SupportArithmetic& s) {
    return Json{{"N", s.N},
                {"root_size", s.root},
                {"m", s.m},
                {"n", s.n},
                {"L", s.L},
                {"expected_support", s.expected_support},
                {"actual_support", s.actual_support},
                {"member_color", s.member_color},
                {"sum_color", s.sum_color},
                {"lower_chain", s.lower_chain},
                {"upper_chain", s.upper_chain}};
}

inline Certificate support_arithmetic_check(long N, long root) {
    const auto start = std::chrono::steady_clock::now();
    const auto s = support_arithmetic(N, root);
    Certificate cert;
    cert.claim = "support-arithmetic";
    cert.parameters = {{"N", N}, {"root_size", root}};
    cert.verdict = s.ok() ? Verdict::witness : Verdict::counterexample;
    cert.payload = to_json(s);
    cert.search_space = static_cast<std::uint64_t>(s.L);
    cert.elapsed_ms = elapsed_since(start);
    return cert;
}

}  // namespace hindlab
