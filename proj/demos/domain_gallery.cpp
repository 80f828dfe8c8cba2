// Renders three box-domain pictures (with their grading loci) to SVG files
// in the current directory.

#include <heckeforge/svg.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>

using namespace heckeforge;

namespace {

void save(const RenderSpec& spec, const char* path) {
    std::ofstream out(path, std::ios::binary);
    out << render_domain_svg(spec);
    std::printf("wrote %s\n", path);
}

} // namespace

int main() {
    RenderSpec picard;
    picard.domain = make_domain(DomainLabel::Picard, 0.5);
    picard.window_x = picard.domain.x_range;
    picard.window_y = picard.domain.y_range;
    picard.scale = 400;
    save(picard, "picard.svg");

    RenderSpec halves;
    halves.domain = make_domain(DomainLabel::Gamma0Picard, 0.5);
    halves.loci = {GradingLocus::simplex_odd_halves()};
    halves.window_x = {-1, 1};
    halves.window_y = halves.domain.y_range;
    halves.locus_labels = true;
    save(halves, "gamma0_picard.svg");

    const double x_beta = std::sqrt(5.0) / 3.0;
    RenderSpec pair;
    pair.domain = make_domain(DomainLabel::Vinberg, x_beta, true);
    pair.loci = {GradingLocus::complex_pair(x_beta), GradingLocus::complex_multiples(x_beta)};
    pair.window_x = {-1.6, 1.6};
    pair.window_y = pair.domain.y_range;
    pair.axis_labels = true;
    save(pair, "vinberg.svg");
    return 0;
}
