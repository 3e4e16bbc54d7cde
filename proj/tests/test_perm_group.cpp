#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "selfcup/errors.hpp"
#include "selfcup/perm_group.hpp"

using namespace selfcup;

TEST_CASE("cycle parsing and formatting") {
    Perm p = parse_cycles("(1 2)(3 4)", 6);
    CHECK(p(0) == 1);
    CHECK(p(1) == 0);
    CHECK(p(2) == 3);
    CHECK(p(4) == 4);
    CHECK(format_cycles(p) == "(1 2)(3 4)");
    CHECK(parse_cycles("()", 4).is_identity());
    CHECK(format_cycles(Perm::identity(3)) == "()");
    CHECK_THROWS_AS(parse_cycles("(1 7)", 6), ValidationError);
    CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 6), ValidationError);

    auto gens = parse_generator_list("(1 2)(5 6), (3 4)(5 6)", 6);
    CHECK(gens.size() == 2);
    CHECK(gens[0](4) == 5);
}

TEST_CASE("group_closure orders") {
    auto z3 = group_closure(3, {parse_cycles("(1 2 3)", 3)});
    CHECK(z3->order() == 3);

    auto s6 = group_closure(6, {parse_cycles("(1 2 3 4 5 6)", 6), parse_cycles("(1 2)", 6)});
    CHECK(s6->order() == 720);

    auto trivial = group_closure(6, {});
    CHECK(trivial->order() == 1);

    CHECK_THROWS_AS(group_closure(8, {parse_cycles("(1 2 3 4 5 6 7 8)", 8),
                                      parse_cycles("(1 2)", 8)}),
                    SizeError);  // |S8| = 40320 > default cap
    CHECK_THROWS_AS(Perm({0, 0, 1}), ValidationError);
}

TEST_CASE("element order is canonical and identity is index 0") {
    auto s3 = group_closure(3, {parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)});
    CHECK(s3->order() == 6);
    CHECK(s3->element(0).is_identity());
    for (int i = 1; i < s3->order(); ++i)
        CHECK(s3->element(i - 1) < s3->element(i));
    // product/inverse tables agree with direct composition
    for (int i = 0; i < s3->order(); ++i) {
        CHECK(s3->product_index(i, s3->inverse_index(i)) == 0);
        for (int j = 0; j < s3->order(); ++j)
            CHECK(s3->element(s3->product_index(i, j)) == s3->element(i) * s3->element(j));
    }
}

TEST_CASE("cyclic subgroup representatives") {
    auto trivial = group_closure(3, {});
    auto reps0 = cyclic_subgroup_reps(*trivial);
    REQUIRE(reps0.size() == 1);
    CHECK(reps0[0].is_identity());

    auto s3 = group_closure(3, {parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)});
    CHECK(cyclic_subgroup_reps(*s3).size() == 3);  // <id>, <transposition>, <3-cycle>

    auto klein = group_closure(6, {parse_cycles("(1 2)(5 6)", 6), parse_cycles("(3 4)(5 6)", 6)});
    CHECK(klein->order() == 4);
    CHECK(cyclic_subgroup_reps(*klein).size() == 4);  // abelian: no merging
}

TEST_CASE("cyclic reps cover the group and Lagrange holds") {
    auto s4 = group_closure(4, {parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)", 4)});
    CHECK(s4->order() == 24);
    auto reps = cyclic_subgroup_reps(*s4);

    // every g is conjugate to a power of some representative
    for (int gi = 0; gi < s4->order(); ++gi) {
        const Perm g = s4->element(gi);
        bool covered = false;
        for (const Perm& r : reps) {
            Perm pw = Perm::identity(4);
            for (int e = 0; e < r.order() && !covered; ++e) {
                pw = e == 0 ? pw : pw * r;
                Perm target = e == 0 ? Perm::identity(4) : pw * r;
                // walk powers r^(e+1)
                Perm power = Perm::identity(4);
                for (int t = 0; t <= e; ++t) power = power * r;
                for (int hi = 0; hi < s4->order() && !covered; ++hi) {
                    Perm h = s4->element(hi);
                    if (h * power * h.inverse() == g) covered = true;
                }
            }
        }
        CHECK(covered);
    }

    for (const Perm& r : reps) CHECK(s4->order() % r.order() == 0);
}

TEST_CASE("subgroup conjugacy classes of S4 up to order 12") {
    auto s4 = group_closure(4, {parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)", 4)});
    auto classes = subgroup_conjugacy_classes(*s4, 12);
    // S4 subgroup classes: 1, Z2 (two classes), Z3, Z4, V4 (two classes),
    // S3, D4... order <= 12 excludes S4 itself; A4 (order 12) included.
    std::multiset<int> orders;
    for (const auto& h : classes) orders.insert(h->order());
    CHECK(orders.count(1) == 1);
    CHECK(orders.count(2) == 2);
    CHECK(orders.count(3) == 1);
    CHECK(orders.count(4) == 3);  // Z4, V4 normal, V4 non-normal
    CHECK(orders.count(6) == 1);
    CHECK(orders.count(8) == 1);
    CHECK(orders.count(12) == 1);
    for (const auto& h : classes) CHECK(h->is_subgroup_of(*s4));
}
