#include "tilewave/overlay.hpp"

#include "oracles.hpp"

#include "doctest.h"

using namespace tilewave;
using namespace tilewave::geometry;

namespace {

Polygon square(Rational x0, Rational y0, Rational side) {
    return normalized(Polygon({{x0, y0}, {x0 + side, y0}, {x0 + side, y0 + side}, {x0, y0 + side}}));
}

Rational mass(const std::vector<OverlayCell>& cells) {
    Rational s(0);
    for (const auto& c : cells) s += c.multiplicity * polygon_area(c.poly);
    return s;
}

}  // namespace

TEST_SUITE_BEGIN("overlay");

TEST_CASE("coincident squares merge with multiplicity 2") {
    Region a = Region::single(square(0, 0, 1));
    auto cells = overlay({a, a});
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].multiplicity == 2);
    CHECK(polygon_area(cells[0].poly) == Rational(1));
}

TEST_CASE("half-overlapping squares split 1|2|1") {
    Region a = Region::single(square(0, 0, 1));
    Region b = Region::single(square(Rational(1, 2), 0, 1));
    auto cells = overlay({a, b});
    REQUIRE(cells.size() == 3);
    CHECK(cells[0].multiplicity == 1);
    CHECK(cells[1].multiplicity == 2);
    CHECK(cells[2].multiplicity == 1);
    for (const auto& c : cells) CHECK(polygon_area(c.poly) == Rational(1, 2));
}

TEST_CASE("multiplicity mass is conserved") {
    Region a = Region::single(square(0, 0, 2));
    Region b = Region::single(normalized(Polygon({{1, 1}, {3, 1}, {2, 3}})));
    Region c = Region::single(normalized(Polygon({{-1, -1}, {1, Rational(-1, 2)}, {1, 1}, {-1, 2}})));
    auto cells = overlay({a, b, c});
    CHECK(mass(cells) == a.area() + b.area() + c.area());
    // and the brute-force rasterization oracle agrees on a grid
    BBox box{-1, 3, -1, 3};
    long checked = oracles::raster_check({a, b, c}, cells, box, 23);
    CHECK(checked > 300);
}

TEST_CASE("touching squares never overlap") {
    Region a = Region::single(square(0, 0, 1));
    Region b = Region::single(square(1, 0, 1));
    auto cells = overlay({a, b});
    for (const auto& c : cells) CHECK(c.multiplicity == 1);
    CHECK(mass(cells) == Rational(2));
}

TEST_CASE("hole in the middle is not part of the union") {
    // a ring of four rectangles around an empty unit hole
    Region parts({square(0, 0, 3)});
    Region hole_border({
        normalized(Polygon({{1, 1}, {2, 1}, {2, 2}, {1, 2}})),
    });
    auto cells = overlay({parts, hole_border});
    CHECK(mass(cells) == Rational(10));
    // the cell containing (3/2, 3/2) has multiplicity 2
    bool found = false;
    for (const auto& c : cells) {
        if (locate(c.poly, {Rational(3, 2), Rational(3, 2)}) == Location::Inside) {
            CHECK(c.multiplicity == 2);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("region_equal is equality almost everywhere") {
    Region a = Region::single(square(0, 0, 2));
    // same square cut into two triangles
    Region b({normalized(Polygon({{0, 0}, {2, 0}, {2, 2}})),
              normalized(Polygon({{0, 0}, {2, 2}, {0, 2}}))});
    CHECK(region_equal(a, b));
    Region c = Region::single(square(0, 0, 1));
    CHECK(!region_equal(a, c));
    Region d({square(0, 0, 1), square(1, 1, 1), square(1, 0, 1), square(0, 1, 1)});
    CHECK(region_equal(a, d));
}

TEST_CASE("empty input") {
    CHECK(overlay({}).empty());
    CHECK(overlay({Region{}}).empty());
    CHECK(region_equal(Region{}, Region{}));
}

TEST_SUITE_END();
