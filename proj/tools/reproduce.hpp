#pragma once

// Fixed reproduction runs over the shipped code descriptors.

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "constacode/constacode.hpp"

namespace constacode::tools {

struct ReproRow {
    std::string example;
    std::string quantity;
    std::string expected;
    std::string actual;
    bool pass = false;
};

inline ConstaCode load_descriptor(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open descriptor " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
    }
    return code_from_descriptor(j);
}

namespace detail {

inline std::string triple(std::size_t a, std::size_t b, std::size_t c) {
    return "[" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + "]";
}

inline void binary_params(std::vector<ReproRow>& rows, const std::string& example, const ConstaCode& code,
                          std::size_t length, std::size_t dim, std::size_t dist) {
    const BinaryCode& image = code.gray_image();
    const DistanceReport d = min_distance_exact(image);
    const std::string got = triple(image.length(), image.dimension(), d.value);
    const std::string want = triple(length, dim, dist);
    rows.push_back({example, "Gray image [n, k, d]", want, got, got == want});
}

inline void quantum_params(std::vector<ReproRow>& rows, const std::string& example, const ConstaCode& code,
                           const std::string& card, std::size_t gray_dim, std::size_t qn, long long qk,
                           std::size_t d_max, const DistanceOptions& opt) {
    const bool dc = is_dual_containing(code);
    rows.push_back({example, "dual-containing", "yes", dc ? "yes" : "no", dc});
    rows.push_back({example, "|C|", card, cardinality_pretty(code), cardinality_pretty(code) == card});
    const std::size_t dim = code.gray_image().dimension();
    rows.push_back({example, "Gray dimension", std::to_string(gray_dim), std::to_string(dim), dim == gray_dim});
    if (!dc) return;
    DistanceOptions search = opt;
    search.strategy = DistanceStrategy::upper_bound;
    const QuantumParams q = css_params(code, find_tob(code.m()), search);
    rows.push_back({example, "quantum n", std::to_string(qn), std::to_string(q.length), q.length == qn});
    rows.push_back({example, "quantum k", std::to_string(qk), std::to_string(q.logical_dim_exponent),
                    q.logical_dim_exponent == qk});
    rows.push_back({example, "quantum d (witness bound)", "<= " + std::to_string(d_max), q.pretty(),
                    q.distance.value <= d_max});
}

}  // namespace detail

/// `which` is one of "5.5", "6.6-85", "6.6-93", "all".
inline std::vector<ReproRow> reproduce(const std::string& which, const std::filesystem::path& fixtures,
                                       const DistanceOptions& opt = {}) {
    if (which != "5.5" && which != "6.6-85" && which != "6.6-93" && which != "all")
        throw Error(ErrorKind::ParseError, "unknown example '" + which + "'");
    std::vector<ReproRow> rows;
    if (which == "5.5" || which == "all") {
        detail::binary_params(rows, "5.5 C1", load_descriptor(fixtures / "n3-c1.json"), 12, 2, 8);
        detail::binary_params(rows, "5.5 C2", load_descriptor(fixtures / "n3-c2.json"), 12, 6, 4);
        detail::binary_params(rows, "5.5 n=5", load_descriptor(fixtures / "n5.json"), 20, 12, 4);
    }
    if (which == "6.6-85" || which == "all")
        detail::quantum_params(rows, "6.6 n=85", load_descriptor(fixtures / "n85.json"), "4^154", 308, 340, 276, 5,
                               opt);
    if (which == "6.6-93" || which == "all")
        detail::quantum_params(rows, "6.6 n=93", load_descriptor(fixtures / "n93.json"), "4^164*2^10", 338, 372,
                               304, 5, opt);
    return rows;
}

}  // namespace constacode::tools
