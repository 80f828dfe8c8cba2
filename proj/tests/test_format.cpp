#include <heckeforge/format.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <random>

using namespace heckeforge;

TEST_CASE("format_double", "[format]") {
    SECTION("integers print as plain decimals") {
        CHECK(format_double(0.0) == "0");
        CHECK(format_double(-0.0) == "0");
        CHECK(format_double(1.0) == "1");
        CHECK(format_double(-1.0) == "-1");
        CHECK(format_double(100.0) == "100");
        CHECK(format_double(640.0) == "640");
        CHECK(format_double(1e6) == "1000000");
    }
    SECTION("short decimals stay short") {
        CHECK(format_double(0.5) == "0.5");
        CHECK(format_double(-0.25) == "-0.25");
        CHECK(format_double(0.001) == "0.001");
        CHECK(format_double(0.1) == "0.1");
    }
    SECTION("non-terminating values cap at 12 significant digits") {
        CHECK(format_double(1.0 / 3.0) == "0.333333333333");
        CHECK(format_double(2.0 / 3.0) == "0.666666666667");
        CHECK(format_double(0.410958904109589) == "0.41095890411");
    }
    SECTION("exponents are canonicalized") {
        CHECK(format_double(1e-7) == "1e-7");
        CHECK(format_double(2.5e-8) == "2.5e-8");
        CHECK(format_double(1e20) == "1e20");
        CHECK(format_double(-3e-12) == "-3e-12");
    }
    SECTION("values that can round-trip in 12 digits do round-trip") {
        std::mt19937_64 rng(4521);
        std::uniform_real_distribution<double> dist(-100.0, 100.0);
        for (int i = 0; i < 200; ++i) {
            // quantized values have short exact decimal forms
            double x = std::round(dist(rng) * 1e6) / 1e6;
            std::string s = format_double(x);
            CHECK(std::strtod(s.c_str(), nullptr) == x);
        }
    }
    SECTION("non-finite values are rejected") {
        CHECK_THROWS_AS(format_double(std::numeric_limits<double>::infinity()),
                        std::domain_error);
        CHECK_THROWS_AS(format_double(std::numeric_limits<double>::quiet_NaN()),
                        std::domain_error);
    }
}

TEST_CASE("json builder", "[format]") {
    SECTION("key order is insertion order") {
        Json j = Json::object().set("b", 1).set("a", 2).set("c", Json::array().push_back(3));
        CHECK(j.dump() == "{\"b\":1,\"a\":2,\"c\":[3]}");
    }
    SECTION("scalar forms") {
        CHECK(Json(nullptr).dump() == "null");
        CHECK(Json(true).dump() == "true");
        CHECK(Json(false).dump() == "false");
        CHECK(Json(42).dump() == "42");
        CHECK(Json(-7L).dump() == "-7");
        CHECK(Json(0.5).dump() == "0.5");
        CHECK(Json("hi").dump() == "\"hi\"");
    }
    SECTION("string escaping") {
        CHECK(Json("a\"b").dump() == "\"a\\\"b\"");
        CHECK(Json("a\\b").dump() == "\"a\\\\b\"");
        CHECK(Json("a\nb").dump() == "\"a\\nb\"");
        CHECK(Json(std::string("a\x03") + "b").dump() == "\"a\\u0003b\"");
    }
    SECTION("nested structures") {
        Json j = Json::object().set(
            "rows", Json::array()
                        .push_back(Json::array().push_back(1).push_back(0))
                        .push_back(Json::object().set("x", 1.5)));
        CHECK(j.dump() == "{\"rows\":[[1,0],{\"x\":1.5}]}");
    }
    SECTION("dump is deterministic") {
        auto make = [] {
            return Json::object()
                .set("v", 1.0 / 3.0)
                .set("list", Json::array().push_back(2.5e-8).push_back("s"));
        };
        CHECK(make().dump() == make().dump());
    }
}
