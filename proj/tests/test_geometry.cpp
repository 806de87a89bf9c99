#include "tilewave/geometry.hpp"
#include "tilewave/overlay.hpp"
#include "tilewave/region_json.hpp"

#include "doctest.h"

using namespace tilewave;
using namespace tilewave::geometry;

namespace {

Polygon square(Rational x0, Rational y0, Rational side) {
    return normalized(Polygon({{x0, y0}, {x0 + side, y0}, {x0 + side, y0 + side}, {x0, y0 + side}}));
}

Region w21_region() {
    Polygon pos = normalized(Polygon({{1, Rational(-1, 2)}, {2, -1}, {2, 1}, {1, Rational(1, 2)}}));
    Polygon neg = normalized(Polygon({{-1, Rational(1, 2)}, {-2, 1}, {-2, -1}, {-1, Rational(-1, 2)}}));
    return Region({pos, neg});
}

}  // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("rational parsing and canonical form") {
    CHECK(*parse_rational("3/2") == Rational(3, 2));
    CHECK(*parse_rational("-7") == Rational(-7));
    CHECK(*parse_rational("6/4") == Rational(3, 2));  // lowest terms
    CHECK(!parse_rational("1.5").has_value());
    CHECK(!parse_rational("3/0").has_value());
    CHECK(!parse_rational("").has_value());
    CHECK(!parse_rational("2/-3").has_value());
    CHECK(format_rational(Rational(-3, 2)) == "-3/2");
    CHECK(format_rational(Rational(4)) == "4");
    CHECK(rat_den(Rational(6, 4)) == 2);  // stored reduced, positive denominator
}

TEST_CASE("rational floor and ceil") {
    CHECK(rat_floor(Rational(7, 2)) == 3);
    CHECK(rat_floor(Rational(-7, 2)) == -4);
    CHECK(rat_floor(Rational(4)) == 4);
    CHECK(rat_ceil(Rational(7, 2)) == 4);
    CHECK(rat_ceil(Rational(-7, 2)) == -3);
    CHECK(rat_gcd(Rational(3, 2), Rational(2)) == Rational(1, 2));
    CHECK(rat_gcd(Rational(1), Rational(2)) == Rational(1));
    CHECK(rat_pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("polygon_area: frozen values") {
    CHECK(polygon_area(square(0, 0, 1)) == Rational(1));
    CHECK(polygon_area(normalized(Polygon({{0, 0}, {1, 0}, {0, 1}}))) == Rational(1, 2));
    // wedge area equals the integral of b*x over [1,a]: 3/2 at a=2, b=1
    Polygon wedge = normalized(Polygon({{1, Rational(-1, 2)}, {2, -1}, {2, 1}, {1, Rational(1, 2)}}));
    CHECK(polygon_area(wedge) == Rational(3, 2));
    CHECK_THROWS(polygon_area(Polygon({{0, 0}, {1, 1}, {2, 2}})));  // degenerate
}

TEST_CASE("normalized merges collinear vertices and fixes orientation") {
    Polygon p({{0, 0}, {Rational(1, 2), 0}, {1, 0}, {1, 1}, {0, 1}});
    Polygon q = normalized(p);
    CHECK(q.size() == 4);
    CHECK(signed_area(q) == Rational(1));
    Polygon cw({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    CHECK(signed_area(normalized(cw)) == Rational(1));
}

TEST_CASE("polygon validity predicates") {
    CHECK(polygon_is_convex(square(0, 0, 2)));
    Polygon ell = normalized(Polygon({{0, 0}, {2, 0}, {2, 2}, {1, 2}, {1, 1}, {0, 1}}));
    CHECK(!polygon_is_convex(ell));
    CHECK(polygon_is_simple(ell));
    Polygon bow({{0, 0}, {1, 1}, {1, 0}, {0, 1}});
    CHECK(!polygon_is_simple(bow));
}

TEST_CASE("affine_image basics") {
    Region r = Region::single(square(0, 0, 1));
    SUBCASE("identity") {
        Region img = affine_image(r, Mat2::identity(), {0, 0});
        CHECK(region_equal(img, r));
    }
    SUBCASE("diag(2,2) scales area by 4") {
        Region img = affine_image(r, Mat2::from_rational(2, 0, 0, 2), {0, 0});
        CHECK(img.area() == Rational(4));
    }
    SUBCASE("orientation restored for negative determinant") {
        Region img = affine_image(r, Mat2::from_rational(-1, 0, 0, 1), {0, 0});
        CHECK(img.area() == Rational(1));
    }
    SUBCASE("singular matrix rejected") {
        CHECK_THROWS(affine_image(r, Mat2::from_rational(1, 1, 1, 1), {0, 0}));
    }
}

TEST_CASE("affine_image: shear dual action on the wedge pair") {
    // S_1^{-T} = [[1,0],[-1,1]] maps (x,y) to (x, y-x)
    Region w = w21_region();
    Region img = affine_image(w, Mat2::from_rational(1, 0, -1, 1), {0, 0});
    CHECK(img.area() == w.area());
    Region expected({normalized(Polygon({{1, Rational(-3, 2)}, {2, -3}, {2, -1}, {1, Rational(-1, 2)}})),
                     normalized(Polygon({{-1, Rational(3, 2)}, {-2, 3}, {-2, 1}, {-1, Rational(1, 2)}}))});
    CHECK(region_equal(img, expected));
}

TEST_CASE("area scales by |det| under affine maps") {
    Region r({square(0, 0, 1), square(3, 1, 2)});
    const Mat2 mats[] = {Mat2::from_rational(2, 1, 0, Rational(1, 3)),
                         Mat2::from_rational(0, -1, 1, 0),
                         Mat2::from_rational(Rational(3, 2), Rational(1, 2), 1, 1)};
    for (const auto& m : mats) {
        Rational d = m.det();
        Region img = affine_image(r, m, {Rational(1, 7), Rational(-2, 5)});
        CHECK(img.area() == abs(d) * r.area());
    }
}

TEST_CASE("clip: convex fast path") {
    Region w = w21_region();
    SUBCASE("region inside window is unchanged") {
        Polygon window = normalized(Polygon({{-5, -5}, {5, -5}, {5, 5}, {-5, 5}}));
        CHECK(region_equal(clip(w, window), w));
    }
    SUBCASE("disjoint window clips to empty") {
        Polygon window = square(10, 10, 1);
        CHECK(clip(w, window).empty());
    }
    SUBCASE("half-plane window keeps one wedge") {
        Polygon window = normalized(Polygon({{0, -2}, {3, -2}, {3, 2}, {0, 2}}));
        Region c = clip(w, window);
        CHECK(c.area() == Rational(3, 2));
    }
}

TEST_CASE("clip: general path and idempotence") {
    Polygon ell = normalized(Polygon({{0, 0}, {2, 0}, {2, 2}, {1, 2}, {1, 1}, {0, 1}}));
    Region r = Region::single(ell);
    Polygon window = square(0, 0, 2);  // coincides with the L bounding box
    Region once = clip(r, window);
    CHECK(once.area() == r.area());
    Polygon half = normalized(Polygon({{Rational(1, 2), Rational(-1)}, {3, -1}, {3, 3}, {Rational(1, 2), 3}}));
    // the L covers [0,1]^2 plus [1,2]x[0,2]; x < 1/2 removes a 1/2 x 1 strip
    Region a = clip(r, half);
    CHECK(a.area() == Rational(5, 2));
    Region b = clip(a, half);
    CHECK(region_equal(a, b));
}

TEST_CASE("point symmetry of the wedge tile") {
    Region w = w21_region();
    Region flipped = affine_image(w, Mat2::from_rational(-1, 0, 0, -1), {0, 0});
    CHECK(region_equal(flipped, w));
}

TEST_CASE("locate") {
    Polygon sq = square(0, 0, 2);
    CHECK(locate(sq, {1, 1}) == Location::Inside);
    CHECK(locate(sq, {0, 1}) == Location::Boundary);
    CHECK(locate(sq, {2, 2}) == Location::Boundary);
    CHECK(locate(sq, {3, 1}) == Location::Outside);
    CHECK(locate(sq, {Rational(1, 3), Rational(999, 500)}) == Location::Inside);
}

TEST_CASE("lattice basics") {
    Lattice2 g = Lattice2::diagonal(1, Rational(3, 2));
    CHECK(g.covolume == Rational(3, 2));
    CHECK(g.point(2, -1) == Point2{2, Rational(-3, 2)});
    CHECK(polygon_area(g.fundamental_domain()) == g.covolume);
    CHECK_THROWS(Lattice2::from_basis(Mat2::from_rational(1, 2, 2, 4)));
    Lattice2 sheared = Lattice2::from_basis(Mat2::from_rational(1, 1, 0, 1));
    CHECK(sheared.covolume == Rational(1));
    CHECK(polygon_area(sheared.fundamental_domain()) == Rational(1));
}

TEST_CASE("region json round trip") {
    Region w = w21_region();
    auto j = region_to_json(w);
    CHECK(j["schema"] == std::string(kRegionSchema));
    Region back = region_from_json(j);
    CHECK(region_equal(w, back));
    CHECK(back.area() == w.area());
    // no floats anywhere in the schema
    CHECK(j.dump().find('.') == std::string::npos);
}

TEST_SUITE_END();
