#include <doctest.h>

#include <cmath>

#include "chordal/chordal.hpp"
#include "chordal/render.hpp"
#include "oracles.hpp"

using namespace chordal;

TEST_CASE("element counts per depth") {
    const std::string one = render_svg(4, 1.5, {});
    CHECK(one.rfind("<?xml", 0) == 0);
    CHECK(one.find("version=\"1.1\"") != std::string::npos);
    CHECK(one.find("</svg>") != std::string::npos);
    CHECK(oracle::count_occurrences(one, "class=\"outer\"") == 1);
    CHECK(oracle::count_occurrences(one, "class=\"chord\"") == 4);
    CHECK(oracle::count_occurrences(one, "class=\"inner\"") == 1);

    RenderOptions opts;
    opts.depth = 2;
    const std::string two = render_svg(4, 1.5, opts);
    CHECK(oracle::count_occurrences(two, "class=\"chord\"") == 8);
    CHECK(oracle::count_occurrences(two, "class=\"inner\"") == 2);

    const std::string hex = render_svg(6, 7.0 / 3.0, {});
    CHECK(oracle::count_occurrences(hex, "class=\"chord\"") == 6);
}

TEST_CASE("rendered coordinates reproduce the ratio") {
    for (auto [n, d] : {std::pair{6, 7.0 / 3.0}, std::pair{4, 1.5}, std::pair{8, 2.5}, std::pair{12, 4.4}}) {
        const std::string svg = render_svg(n, d, {});
        const auto outer = oracle::svg_polygons(svg, "outer");
        const auto inner = oracle::svg_polygons(svg, "inner");
        REQUIRE(outer.size() == 1);
        REQUIRE(inner.size() == 1);
        CHECK(inner[0].size() == static_cast<std::size_t>(n));
        const double measured = oracle::shoelace(outer[0]) / oracle::shoelace(inner[0]);
        const double expected = area_ratio(n, d);
        CHECK(std::abs(measured - expected) <= 1e-6 * expected);
    }
    const auto nested = oracle::svg_polygons(render_svg(4, 1.5, {.depth = 2}), "inner");
    REQUIRE(nested.size() == 2);
    CHECK(std::abs(oracle::shoelace(nested[0]) / oracle::shoelace(nested[1]) - 5.0) < 1e-6);
}

TEST_CASE("output is deterministic and fits the canvas") {
    RenderOptions opts;
    opts.width_px = 300;
    opts.margin_px = 10;
    opts.depth = 3;
    opts.show_labels = true;
    const std::string a = render_svg(7, 2.9, opts);
    CHECK(a == render_svg(7, 2.9, opts));
    CHECK(a.find(">A</text>") != std::string::npos);
    for (const auto& ring : oracle::svg_polygons(a, "outer")) {
        for (const auto& p : ring) {
            CHECK(p.x >= 10 - 1e-6);
            CHECK(p.x <= 290 + 1e-6);
            CHECK(p.y >= 10 - 1e-6);
            CHECK(p.y <= 290 + 1e-6);
        }
    }
}

TEST_CASE("invalid options and domains") {
    auto kind = [](auto&& fn) {
        try {
            fn();
        } catch (const GeometryError& e) {
            return e.kind();
        }
        return ErrorKind::invalid_spec;
    };
    CHECK(kind([] { render_svg(4, 1.5, {.width_px = 32}); }) == ErrorKind::invalid_options);
    CHECK(kind([] { render_svg(4, 1.5, {.depth = 9}); }) == ErrorKind::invalid_options);
    CHECK(kind([] { render_svg(4, 1.5, {.depth = 0}); }) == ErrorKind::invalid_options);
    CHECK(kind([] { render_svg(4, 1.5, {.width_px = 100, .margin_px = 50}); }) == ErrorKind::invalid_options);
    RenderOptions bad_color;
    bad_color.inner_color = "red\" onload=\"x";
    CHECK(kind([&] { render_svg(4, 1.5, bad_color); }) == ErrorKind::invalid_options);
    CHECK(kind([] { render_svg(4, 2.0, {}); }) == ErrorKind::center_chord);
}
