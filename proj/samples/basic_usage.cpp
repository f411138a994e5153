// Builds the length-3 code <f h, u f g> over GF(4) + u GF(4) and prints its
// Gray image parameters and dual.

#include <iostream>

#include "constacode/constacode.hpp"

int main() {
    using namespace constacode;
    const unsigned m = 2;
    const std::size_t n = 3;

    const auto factors = factor_xn_minus_1(n, m);  // x + 1, x + w, x + w^2
    const RPoly f = mu_lift(factors[0], n);
    const RPoly g = mu_lift(factors[2], n);
    const RPoly h = mu_lift(factors[1], n);
    const ConstaCode code = build_code(f, g, h, n, m);

    const BinaryCode& image = code.gray_image();
    const DistanceReport d = min_distance_exact(image);
    std::cout << "f = " << to_text(f) << "\n"
              << "g = " << to_text(g) << "\n"
              << "h = " << to_text(h) << "\n"
              << "|C| = " << cardinality_pretty(code) << "\n"
              << "Gray image: [" << image.length() << ", " << image.dimension() << ", " << d.value << "]\n"
              << "dual-containing: " << (is_dual_containing(code) ? "yes" : "no") << "\n";

    const ConstaCode perp = dual(code);
    std::cout << "dual: f = " << to_text(perp.f()) << ", g = " << to_text(perp.g()) << ", h = " << to_text(perp.h())
              << "\n";
}
