// Prints the monomial expansions of the Jack polynomials P_lambda up to
// degree 4 at a few values of alpha. At alpha = 1 the table reproduces the
// Schur polynomials.

#include <heckeforge/jack.hpp>

#include <cstdio>

using namespace heckeforge;

int main() {
    for (Rational alpha : {Rational(1, 2), Rational(1), Rational(2)}) {
        std::printf("alpha = %s\n", rational_str(alpha).c_str());
        for (long d = 1; d <= 4; ++d) {
            for (const Partition& la : partitions_of(d)) {
                std::string line = "  P_(" + la.str() + ") =";
                bool first = true;
                for (const auto& [mu, c] : jack_coefficients(la, alpha)) {
                    line += first ? " " : " + ";
                    if (c != 1) line += rational_str(c) + "*";
                    line += "m_(" + mu.str() + ")";
                    first = false;
                }
                std::printf("%s\n", line.c_str());
            }
        }
        std::printf("\n");
    }
    return 0;
}
