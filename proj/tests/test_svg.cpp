#include <heckeforge/svg.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

using namespace heckeforge;

namespace {

const double kRoot53 = std::sqrt(5.0) / 3.0;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden_path(const char* name) {
    return std::string(HECKEFORGE_GOLDEN_DIR) + "/" + name;
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

/// Attribute value of the first occurrence of `attr` after position `from`.
double attr_value(const std::string& svg, const std::string& attr, std::size_t from = 0) {
    std::size_t pos = svg.find(attr + "=\"", from);
    REQUIRE(pos != std::string::npos);
    pos += attr.size() + 2;
    return std::strtod(svg.c_str() + pos, nullptr);
}

RenderSpec picard_spec() {
    RenderSpec s;
    s.domain = make_domain(DomainLabel::Picard, 0.5);
    s.window_x = s.domain.x_range;
    s.window_y = s.domain.y_range;
    return s;
}

RenderSpec gamma0_picard_spec() {
    RenderSpec s;
    s.domain = make_domain(DomainLabel::Gamma0Picard, 0.5);
    s.loci = {GradingLocus::simplex_odd_halves()};
    s.window_x = {-1, 1};
    s.window_y = s.domain.y_range;
    return s;
}

RenderSpec vinberg_pair_spec() {
    RenderSpec s;
    s.domain = make_domain(DomainLabel::Vinberg, 0.7453559924999299, true);
    s.loci = {GradingLocus::complex_pair(0.7453559924999299)};
    s.window_x = {-1.6, 1.6};
    s.window_y = s.domain.y_range;
    return s;
}

} // namespace

TEST_CASE("renders match the golden files byte for byte", "[svg]") {
    CHECK(render_domain_svg(picard_spec()) == read_file(golden_path("picard_box.svg")));
    CHECK(render_domain_svg(gamma0_picard_spec()) ==
          read_file(golden_path("gamma0_picard_odd_halves.svg")));
    CHECK(render_domain_svg(vinberg_pair_spec()) ==
          read_file(golden_path("vinberg_pair_complexes.svg")));
}

TEST_CASE("plain box render", "[svg]") {
    std::string svg = render_domain_svg(picard_spec());
    SECTION("exactly one rectangle, no lines") {
        CHECK(count_occurrences(svg, "<rect") == 1);
        CHECK(count_occurrences(svg, "<line") == 0);
    }
    SECTION("aspect ratio 1:1") {
        CHECK(attr_value(svg, "width") == attr_value(svg, "height"));
    }
    SECTION("repeat render is identical") {
        CHECK(svg == render_domain_svg(picard_spec()));
    }
}

TEST_CASE("odd-half simplices across a window", "[svg]") {
    std::string svg = render_domain_svg(gamma0_picard_spec());
    SECTION("four tiles and two dashed segments") {
        CHECK(count_occurrences(svg, "<rect") == 4);
        CHECK(count_occurrences(svg, "<line") == 2);
        CHECK(count_occurrences(svg, "stroke-dasharray") == 2);
    }
    SECTION("segments sit at -1/2 and +1/2 to 1e-6 of a unit") {
        const double scale = 200;
        std::size_t first = svg.find("<line");
        std::size_t second = svg.find("<line", first + 1);
        double x1 = attr_value(svg, "x1", first) / scale - 1.0;  // window lo = -1
        double x2 = attr_value(svg, "x1", second) / scale - 1.0;
        CHECK_THAT(x1, Catch::Matchers::WithinAbs(-0.5, 1e-6));
        CHECK_THAT(x2, Catch::Matchers::WithinAbs(0.5, 1e-6));
    }
}

TEST_CASE("pair complexes render solid", "[svg]") {
    std::string svg = render_domain_svg(vinberg_pair_spec());
    SECTION("two solid segments") {
        CHECK(count_occurrences(svg, "<line") == 2);
        CHECK(count_occurrences(svg, "stroke-dasharray") == 0);
    }
    SECTION("segments sit at +-2 x_beta to 1e-6 of a unit") {
        const double scale = 200;
        std::size_t first = svg.find("<line");
        std::size_t second = svg.find("<line", first + 1);
        double x1 = attr_value(svg, "x1", first) / scale - 1.6;
        double x2 = attr_value(svg, "x1", second) / scale - 1.6;
        CHECK_THAT(x1, Catch::Matchers::WithinAbs(-2 * kRoot53, 1e-6));
        CHECK_THAT(x2, Catch::Matchers::WithinAbs(2 * kRoot53, 1e-6));
    }
}

TEST_CASE("annotations", "[svg]") {
    RenderSpec s = gamma0_picard_spec();
    SECTION("axis labels add two text elements") {
        s.axis_labels = true;
        CHECK(count_occurrences(render_domain_svg(s), "<text") == 2);
    }
    SECTION("locus labels add one text element per position") {
        s.locus_labels = true;
        std::string svg = render_domain_svg(s);
        CHECK(count_occurrences(svg, "<text") == 2);
        CHECK(svg.find("simplex u=-0.5") != std::string::npos);
        CHECK(svg.find("simplex u=0.5") != std::string::npos);
    }
}

TEST_CASE("render validation", "[svg]") {
    RenderSpec s = picard_spec();
    SECTION("degenerate windows are rejected") {
        s.window_x = {1, 0};
        CHECK_THROWS_AS(render_domain_svg(s), std::domain_error);
        s.window_x = {0.3, 0.3};
        CHECK_THROWS_AS(render_domain_svg(s), std::domain_error);
    }
    SECTION("scale must be positive") {
        s.scale = 0;
        CHECK_THROWS_AS(render_domain_svg(s), std::domain_error);
        s.scale = -2;
        CHECK_THROWS_AS(render_domain_svg(s), std::domain_error);
    }
}
