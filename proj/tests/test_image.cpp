#include <doctest.h>

#include "helpers.hpp"
#include "ssg/errors.hpp"
#include "ssg/image.hpp"

using namespace ssg;

TEST_CASE("image construction validates pixel count") {
    CHECK_THROWS_AS(Image(2, 2, std::vector<double>{1, 2, 3}), Error);
    Image img(3, 2, 7.0);
    CHECK(img.size() == 6);
    CHECK(img.at(2, 1) == 7.0);
}

TEST_CASE("gradient of a linear ramp is exact everywhere") {
    Image img(7, 5);
    for (int y = 0; y < 5; ++y) {
        for (int x = 0; x < 7; ++x) img.at(x, y) = 2.0 * x;
    }
    const GradientField g = gradient(img);
    for (int y = 0; y < 5; ++y) {
        for (int x = 0; x < 7; ++x) {
            CHECK(g.gx.at(x, y) == 2.0);  // one-sided borders included
            CHECK(g.gy.at(x, y) == 0.0);
        }
    }
}

TEST_CASE("gradient of a constant image is zero") {
    const GradientField g = gradient(Image(6, 6, 42.0));
    for (double v : g.gx.pixels()) CHECK(v == 0.0);
    for (double v : g.gy.pixels()) CHECK(v == 0.0);
}

TEST_CASE("gradient of an impulse row matches the hand stencil") {
    // Row [0,0,1,0,0] embedded in an otherwise-zero 5x5 image.
    Image img(5, 5, 0.0);
    img.at(2, 2) = 1.0;
    const GradientField g = gradient(img);
    const double expected[5] = {0.0, 0.5, 0.0, -0.5, 0.0};
    for (int x = 0; x < 5; ++x) CHECK(g.gx.at(x, 2) == expected[x]);
}

TEST_CASE("gradient is exact for affine images") {
    const double alpha = 1.75, beta = -0.5, gamma = 12.0;
    Image img(9, 8);
    for (int y = 0; y < 8; ++y) {
        for (int x = 0; x < 9; ++x) img.at(x, y) = alpha * x + beta * y + gamma;
    }
    const GradientField g = gradient(img);
    for (double v : g.gx.pixels()) CHECK(v == doctest::Approx(alpha).epsilon(1e-12));
    for (double v : g.gy.pixels()) CHECK(v == doctest::Approx(beta).epsilon(1e-12));
}

TEST_CASE("gradient is linear in the image") {
    const Image a = testutil::random_image(12, 9, 11);
    const Image b = testutil::random_image(12, 9, 22);
    const double s = 2.5, t = -1.25;

    Image combo(12, 9);
    for (std::size_t i = 0; i < combo.pixels().size(); ++i) {
        combo.pixels()[i] = s * a.pixels()[i] + t * b.pixels()[i];
    }
    const GradientField ga = gradient(a);
    const GradientField gb = gradient(b);
    const GradientField gc = gradient(combo);
    for (std::size_t i = 0; i < gc.gx.pixels().size(); ++i) {
        CHECK(gc.gx.pixels()[i] ==
              doctest::Approx(s * ga.gx.pixels()[i] + t * gb.gx.pixels()[i])
                  .epsilon(1e-12));
        CHECK(gc.gy.pixels()[i] ==
              doctest::Approx(s * ga.gy.pixels()[i] + t * gb.gy.pixels()[i])
                  .epsilon(1e-12));
    }
}

TEST_CASE("gradient matches the scalar reference bit-exactly") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Image img = testutil::random_image(16, 16, 1000 + seed);
        const GradientField g = gradient(img);
        Image rx, ry;
        testutil::ref_gradient(img, rx, ry);
        CHECK(testutil::max_abs_diff(g.gx, rx) == 0.0);
        CHECK(testutil::max_abs_diff(g.gy, ry) == 0.0);
    }
}

TEST_CASE("gradient rejects images below 3x3") {
    CHECK_THROWS_AS(gradient(Image(2, 5, 0.0)), ImageTooSmall);
    CHECK_THROWS_AS(gradient(Image(5, 1, 0.0)), ImageTooSmall);
}
