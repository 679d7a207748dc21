#include "doctest.h"

#include "cvpde/curve_table.hpp"

#include "support.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

using namespace cvpde;
using testsupport::Rng;

TEST_SUITE("table") {

TEST_CASE("column bookkeeping") {
    CurveTable t;
    CHECK(t.row_count() == 0);
    t.add_column("a", {1.0, 2.0, 3.0});
    CHECK(t.row_count() == 3);
    t.add_column("b", {4.0, 5.0, 6.0});
    CHECK(t.columns.size() == 2);
    CHECK_NOTHROW(t.validate());

    CHECK_THROWS_AS(t.add_column("b", {7.0, 8.0, 9.0}), std::invalid_argument);
    CHECK_THROWS_AS(t.add_column("c", {7.0, 8.0}), std::invalid_argument);
    CHECK_THROWS_AS(t.add_column("", {7.0, 8.0, 9.0}), std::invalid_argument);
    CHECK_THROWS_AS(t.add_column("x,y", {7.0, 8.0, 9.0}),
                    std::invalid_argument);
}

TEST_CASE("validate rejects non-finite values") {
    CurveTable t;
    t.add_column("a", {1.0, 2.0});
    CHECK_NOTHROW(t.validate());
    t.columns[0].values[1] = std::nan("");
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);
    t.columns[0].values[1] = HUGE_VAL;
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);
}

TEST_CASE("golden CSV bytes") {
    CurveTable t;
    t.add_column("x", {0.0, 1.5});
    t.add_column("y", {-2.0, 0.001});
    CHECK(t.to_csv() ==
          "x,y\n"
          "0.0000000000000000e+00,-2.0000000000000000e+00\n"
          "1.5000000000000000e+00,1.0000000000000000e-03\n");
}

TEST_CASE("empty table serializes to an empty string") {
    CHECK(CurveTable{}.to_csv() == "");
}

TEST_CASE("property: CSV round-trips every double exactly") {
    Rng rng(140862);
    std::vector<double> values;
    values.reserve(200);
    for (int i = 0; i < 200; ++i) {
        // Mix magnitudes from 1e-12 to 1e12, both signs, and a few specials.
        const double mag = std::pow(10.0, rng.uniform(-12.0, 12.0));
        double v = (rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0) * mag *
                   rng.uniform(0.5, 1.5);
        if (i == 0) v = 0.0;
        if (i == 1) v = 1.0 / 3.0;
        values.push_back(v);
    }
    CurveTable t;
    t.add_column("v", values);
    const std::string csv = t.to_csv();

    // Walk the rows (skip the header) and strtod each payload back.
    std::size_t pos = csv.find('\n') + 1;
    for (int i = 0; i < 200; ++i) {
        const std::size_t end = csv.find('\n', pos);
        REQUIRE(end != std::string::npos);
        const std::string cell = csv.substr(pos, end - pos);
        char* rest = nullptr;
        const double back = std::strtod(cell.c_str(), &rest);
        CHECK(*rest == '\0');
        CHECK(back == values[std::size_t(i)]);
        pos = end + 1;
    }
    CHECK(pos == csv.size());

    // Determinism: re-serialization is byte-identical.
    CHECK(t.to_csv() == csv);
}

}  // TEST_SUITE
