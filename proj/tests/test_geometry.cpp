#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "meroext/geometry.hpp"

using namespace meroext;

namespace {

BoundaryCurve unit_circle(std::size_t nodes = 256) {
    return BoundaryCurve::circle({0.0, 0.0}, 1.0, nodes);
}

DomainBoundary disk(std::size_t nodes = 256) {
    return build_domain({unit_circle(nodes)});
}

DomainBoundary annulus(double inner = 0.5, std::size_t nodes = 256) {
    return build_domain({unit_circle(nodes), BoundaryCurve::circle({0.0, 0.0}, inner, nodes)});
}

}  // namespace

TEST_CASE("curve evaluation on circles") {
    const BoundaryCurve c = unit_circle();
    CHECK(std::abs(c.eval(0.0) - cplx{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(c.eval(std::numbers::pi / 2.0) - cplx{0.0, 1.0}) < 1e-15);

    const cplx center{0.3, -0.2};
    const BoundaryCurve shifted = BoundaryCurve::circle(center, 0.7);
    CHECK(std::abs(shifted.eval(std::numbers::pi) - (center - 0.7)) < 1e-15);

    // gamma'(t) = i e^{it} for the unit circle
    const double t = 1.234;
    CHECK(std::abs(c.deriv(t) - cplx{0.0, 1.0} * c.eval(t)) < 1e-14);
}

TEST_CASE("curve node counts must be powers of two") {
    CHECK_THROWS_AS(BoundaryCurve::circle({0.0, 0.0}, 1.0, 100), InputError);
    CHECK_NOTHROW(BoundaryCurve::circle({0.0, 0.0}, 1.0, 128));
}

TEST_CASE("signed area of a circle") {
    CHECK(unit_circle().signed_area() == doctest::Approx(std::numbers::pi).epsilon(1e-12));
    // reversed Fourier direction: gamma(t) = e^{-it}
    const BoundaryCurve cw{{{-1, cplx{1.0, 0.0}}}};
    CHECK(cw.signed_area() == doctest::Approx(-std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("build_domain on a single circle") {
    const DomainBoundary d = disk();
    CHECK(d.curve_count() == 1);
    CHECK(d.outer_index() == 0);
    CHECK(d.curve(0).orientation() == +1);
    CHECK(d.diameter() == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("build_domain normalizes an annulus to the standard orientation") {
    const DomainBoundary d = annulus();
    CHECK(d.curve_count() == 2);
    CHECK(d.outer_index() == 0);
    // outer counterclockwise, hole clockwise
    const double outer_area = d.curve(0).signed_area() * d.curve(0).orientation();
    const double inner_area = d.curve(1).signed_area() * d.curve(1).orientation();
    CHECK(outer_area > 0.0);
    CHECK(inner_area < 0.0);
}

TEST_CASE("coincident circles are rejected") {
    CHECK_THROWS_AS(build_domain({unit_circle(), unit_circle()}), CurvesIntersect);
}

TEST_CASE("overlapping circles are rejected") {
    CHECK_THROWS_AS(build_domain({unit_circle(),
                                  BoundaryCurve::circle({0.9, 0.0}, 0.5)}),
                    CurvesIntersect);
}

TEST_CASE("nested inner curves are rejected") {
    CHECK_THROWS_AS(build_domain({BoundaryCurve::circle({0.0, 0.0}, 2.0),
                                  BoundaryCurve::circle({0.0, 0.0}, 1.0),
                                  BoundaryCurve::circle({0.0, 0.0}, 0.5)}),
                    AmbiguousNesting);
}

TEST_CASE("two side-by-side circles have no outer curve") {
    CHECK_THROWS_AS(build_domain({BoundaryCurve::circle({-2.0, 0.0}, 1.0),
                                  BoundaryCurve::circle({2.0, 0.0}, 1.0)}),
                    AmbiguousNesting);
}

TEST_CASE("a curve with vanishing derivative is degenerate") {
    // gamma(t) = cos t collapses onto a segment; gamma'(0) = 0
    CHECK_THROWS_AS(build_domain({BoundaryCurve{{{1, cplx{0.5, 0.0}},
                                                 {-1, cplx{0.5, 0.0}}}}}),
                    DegenerateCurve);
}

TEST_CASE("locate on the unit disc") {
    const DomainBoundary d = disk();
    CHECK(d.locate({0.0, 0.0}) == RegionTag{Region::Interior, 0});
    CHECK(d.locate({2.0, 0.0}) == RegionTag{Region::Exterior, 0});
    CHECK(d.locate({1.0 + 1e-5, 0.0}).region == Region::NearBoundary);
}

TEST_CASE("locate on the annulus") {
    const DomainBoundary d = annulus();
    CHECK(d.locate({0.25, 0.0}) == RegionTag{Region::Hole, 1});
    CHECK(d.locate({0.75, 0.0}).region == Region::Interior);
    CHECK(d.locate({1.5, 0.0}).region == Region::Exterior);
}

TEST_CASE("locate is invariant under grid refinement") {
    const std::vector<cplx> points{{0.0, 0.0},   {0.75, 0.1},  {0.25, 0.0},
                                   {-0.6, -0.3}, {1.5, 0.0},   {0.0, -3.0},
                                   {0.55, 0.0},  {0.0, 0.95}};
    const DomainBoundary coarse = annulus(0.5, 128);
    const DomainBoundary fine = annulus(0.5, 256);
    for (cplx z : points) {
        const RegionTag a = coarse.locate(z);
        if (a.region == Region::NearBoundary) continue;
        CHECK(fine.locate(z) == a);
    }
}

TEST_CASE("contour integrals on the unit circle") {
    const DomainBoundary d = disk();
    const auto& g = d.grid(0);

    std::vector<cplx> identity(g.point.begin(), g.point.end());
    CHECK(std::abs(d.integrate(identity)) < 1e-13);

    std::vector<cplx> inverse;
    for (cplx z : g.point) inverse.push_back(1.0 / z);
    CHECK(std::abs(d.integrate(inverse) - cplx{0.0, kTwoPi}) < 1e-12);

    std::vector<cplx> cauchy;
    for (cplx z : g.point) cauchy.push_back(1.0 / (z - 0.3));
    CHECK(std::abs(d.integrate(cauchy) - cplx{0.0, kTwoPi}) < 1e-12);
}

TEST_CASE("integration rejects mismatched sample counts") {
    const DomainBoundary d = disk();
    std::vector<cplx> bad(d.total_nodes() - 1, cplx{1.0, 0.0});
    CHECK_THROWS_AS(d.integrate(bad), SampleMismatch);
}

TEST_CASE("quadrature error decays geometrically for zeta^k/(zeta - a)") {
    // oracle: contour integral of zeta^k/(zeta - a) over |zeta| = 1 is 2*pi*i*a^k
    const cplx a{0.54, 0.42};  // |a| < 0.7
    REQUIRE(std::abs(a) <= 0.7 + 1e-12);
    std::vector<double> errors;
    for (std::size_t m : {32u, 64u, 128u, 256u}) {
        const DomainBoundary d = disk(m);
        const auto& g = d.grid(0);
        double worst = 0.0;
        for (int k = 0; k <= 4; ++k) {
            std::vector<cplx> vals;
            for (cplx z : g.point) vals.push_back(std::pow(z, k) / (z - a));
            const cplx exact = cplx{0.0, kTwoPi} * std::pow(a, k);
            worst = std::max(worst, std::abs(d.integrate(vals) - exact));
        }
        errors.push_back(worst);
    }
    CHECK(errors.back() < 1e-12);
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        // geometric decay until the rounding floor is reached
        CHECK(errors[i + 1] <= std::max(0.5 * errors[i], 1e-14));
    }
}

TEST_CASE("reversing a curve's orientation negates its contour integral") {
    const DomainBoundary d = annulus();
    for (std::size_t ci = 0; ci < d.curve_count(); ++ci) {
        const auto& g = d.grid(ci);
        std::vector<cplx> vals;
        for (cplx z : g.point) vals.push_back(1.0 / (z - cplx{0.1, 0.05}));
        const cplx forward = curve_contour_integral(d.curve(ci), g, vals);
        BoundaryCurve reversed = d.curve(ci);
        reversed.set_orientation(-reversed.orientation());
        const cplx backward = curve_contour_integral(reversed, g, vals);
        CHECK(std::abs(forward + backward) < 1e-13);
    }
}

TEST_CASE("curve winding distinguishes inside from outside") {
    const DomainBoundary d = disk();
    CHECK(curve_winding(d.curve(0), d.grid(0), {0.0, 0.0}) == 1);
    CHECK(curve_winding(d.curve(0), d.grid(0), {0.3, -0.4}) == 1);
    CHECK(curve_winding(d.curve(0), d.grid(0), {2.0, 0.0}) == 0);
}

TEST_CASE("effective winding follows the standard orientation") {
    const DomainBoundary d = annulus();
    const cplx z{0.0, 0.0};  // inside the hole
    CHECK(d.effective_winding(d.outer_index(), z) == 1);
    CHECK(d.effective_winding(1, z) == -1);
}

TEST_CASE("non-circular Fourier curves work end to end") {
    // ellipse with a mild third harmonic
    const BoundaryCurve wavy{{{0, cplx{0.1, 0.0}},
                              {1, cplx{1.2, 0.0}},
                              {-1, cplx{0.25, 0.0}},
                              {3, cplx{0.05, 0.02}}}};
    const DomainBoundary d = build_domain({wavy});
    CHECK(d.curve_count() == 1);
    CHECK(d.locate({0.1, 0.0}).region == Region::Interior);
    CHECK(d.locate({5.0, 0.0}).region == Region::Exterior);

    std::vector<cplx> vals;
    for (cplx z : d.grid(0).point) vals.push_back(1.0 / (z - 0.1));
    CHECK(std::abs(d.integrate(vals) - cplx{0.0, kTwoPi}) < 1e-11);
}
