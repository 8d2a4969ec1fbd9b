#include "doctest.h"
#include "vacdet/partitions.hpp"
#include "vacdet/properties.hpp"

using namespace vacdet;

TEST_CASE("small-norm weights are singular") {
    for (const char* id : {"A2", "B2", "G2"}) {
        auto rep = small_norm_singular_check(catalog(id), 6);
        CAPTURE(id);
        CAPTURE(rep.first_failure);
        CHECK(rep.ok());
        CHECK(rep.small > 1);
        CHECK(rep.checked == 13 * 13);
    }
    // unshifted reading fails already for A1 at lambda = 0
    RootSystem a1 = catalog("A1");
    QVec zero(a1.amb);
    CHECK(a1.bil(zero, zero) < a1.bil(a1.rho, a1.rho));
    CHECK_FALSE(alternating_sum_E_weight(a1, zero, a1.weyl_group()).empty());
    // too small a box is noticed
    CHECK_FALSE(small_norm_singular_check(catalog("G2"), 1).box_covers_ball);
}

TEST_CASE("root multiples have only trivial dot preimages eventually") {
    for (const char* id : {"A2", "B2"}) {
        auto rep = root_multiple_preimages(catalog(id), 40, 160);
        CAPTURE(id);
        CHECK(rep.ok());
        CHECK(rep.bound.size() == catalog(id).positive().size());
        for (const auto& [a, b] : rep.bound) {
            CAPTURE(a);
            CHECK(b < 10);
        }
    }
}
