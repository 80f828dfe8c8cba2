// Reduces a handful of upper-half-plane points into the fundamental domain
// of H(lambda_q) for several q, printing the group word that does it and
// checking the word against its exact matrix.

#include <heckeforge/reduce.hpp>

#include <cstdio>

using namespace heckeforge;

int main() {
    const HalfPlanePoint points[] = {
        {2.7, 0.8}, {-5.25, 0.11}, {0.49, 0.02}, {12.0, 3.0},
    };
    for (int q : {3, 5, 7}) {
        const double lambda = number_field(q)->lambda();
        std::printf("q = %d  (lambda = %.12g)\n", q, lambda);
        for (const auto& z : points) {
            ReductionResult r = reduce_point(z, q);
            HalfPlanePoint back = r.word.to_matrix().apply(z);
            std::printf("  %8.4f%+8.4fi  ->  %8.4f%+8.4fi  in %2d steps  via %s\n", z.re,
                        z.im, r.reduced.re, r.reduced.im, r.steps,
                        r.word.is_identity() ? "(identity)" : r.word.str().c_str());
            if (!in_fundamental_domain(r.reduced, lambda) ||
                std::fabs(back.re - r.reduced.re) > 1e-9 ||
                std::fabs(back.im - r.reduced.im) > 1e-9) {
                std::printf("  ** inconsistent reduction\n");
                return 1;
            }
        }
    }
    return 0;
}
