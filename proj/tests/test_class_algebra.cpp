#include <catch2/catch_amalgamated.hpp>

#include "primal/class_algebra.hpp"

using namespace primal;

namespace {

SignedResidue L(int l) { return SignedResidue::from_label(l); }

std::vector<SignedResidue> all_labels() {
    std::vector<SignedResidue> out;
    for (int l = -9; l <= 9; ++l)
        if (l != 0) out.push_back(L(l));
    return out;
}

} // namespace

TEST_CASE("class_add examples") {
    CHECK(class_add(L(8), L(2)).only() == L(1));
    CHECK(class_add(L(9), L(9)).only() == L(9));
    CHECK(class_add(SignedResidue::null(), L(5)).only() == L(5));
}

TEST_CASE("class_sub examples") {
    CHECK(class_sub(L(2), L(-1)).only() == L(3));
    for (auto a : all_labels()) CHECK(class_sub(a, a).only() == L(9));
    CHECK(class_sub(L(1), L(2)).only() == L(8));
}

TEST_CASE("class_mul examples") {
    CHECK(class_mul(L(7), L(2)).only() == L(5));
    CHECK(class_mul(L(9), L(4)).only() == L(9));
    for (int k = 1; k <= 9; ++k) CHECK(class_mul(L(1), L(k)).only() == L(k));
}

TEST_CASE("class_div examples") {
    CHECK(class_div(L(3), L(3)) == ClassOpOutcome{{L(1), L(4), L(7)}});
    CHECK(class_div(L(1), L(3)).empty());
    CHECK(class_div(L(9), L(9)).size() == 9);
}

TEST_CASE("division is sound and complete over all 81 pairs") {
    for (int a = 1; a <= 9; ++a)
        for (int b = 1; b <= 9; ++b) {
            auto got = class_div(L(a), L(b));
            for (int c = 1; c <= 9; ++c) {
                bool solves = class_mul(L(b), L(c)).only() == L(a);
                CHECK(got.contains(L(c)) == solves);
            }
            auto n = got.size();
            CHECK((n == 0 || n == 1 || n == 3 || n == 9));
        }
}

TEST_CASE("class_pow examples") {
    CHECK(class_pow(L(2), 4).only() == L(7));
    CHECK(class_pow(L(5), 5).only() == L(2));
    for (std::int64_t n = 2; n <= 20; ++n) CHECK(class_pow(L(9), n).only() == L(9));
    CHECK_THROWS_AS(class_pow(L(2), 1), std::domain_error);
    CHECK_THROWS_AS(class_pow(L(2), 0), std::domain_error);
}

TEST_CASE("class_pow agrees with naive iterated multiplication") {
    for (auto a : all_labels())
        for (std::int64_t n = 2; n <= 100; ++n) {
            SignedResidue naive = SignedResidue::positive_for_residue(a.residue());
            for (std::int64_t i = 1; i < n; ++i) naive = class_mul(naive, a).only();
            CHECK(class_pow(a, n).only() == naive);
        }
}

TEST_CASE("power cycle has period 6") {
    for (auto a : all_labels())
        for (std::int64_t n = 2; n <= 200; ++n)
            CHECK(class_pow(a, n) == class_pow(a, n + 6));
}

TEST_CASE("mirror") {
    CHECK(mirror(L(1)) == L(-8));
    CHECK(mirror(L(9)) == L(-9));
    CHECK(mirror(L(-5)) == L(4));
    CHECK_THROWS_AS(mirror(SignedResidue::null()), std::domain_error);
    for (auto a : all_labels()) {
        CHECK(mirror(mirror(a)) == a);
        CHECK(mirror(a).residue() == a.residue());
        CHECK((mirror(a).label() > 0) != (a.label() > 0));
    }
}

TEST_CASE("opposite") {
    CHECK(opposite(L(4)) == L(5));
    CHECK(opposite(L(9)) == L(9));
    CHECK(opposite(L(1)) == L(8));
    CHECK_THROWS_AS(opposite(SignedResidue::null()), std::domain_error);
    for (auto a : all_labels()) CHECK(class_add(a, opposite(a)).only() == L(9));
}

TEST_CASE("cancellation law for addition") {
    for (int a = 1; a <= 9; ++a)
        for (int b = 1; b <= 9; ++b)
            for (int c = 1; c <= 9; ++c)
                if (a != b) CHECK(class_add(L(a), L(c)) != class_add(L(b), L(c)));
}

TEST_CASE("group axioms: addition") {
    auto rep = verify_group_axioms(OpKind::Add);
    CHECK(rep.closure_ok);
    CHECK(rep.associativity_ok);
    CHECK(rep.neutral_label == L(9));
    CHECK(rep.opposite_pairs.size() == 9);
    CHECK(rep.labels_without_opposite.empty());
    REQUIRE(rep.cancellation_ok.has_value());
    CHECK(*rep.cancellation_ok);
    CHECK(rep.counterexamples.empty());
}

TEST_CASE("group axioms: multiplication") {
    auto rep = verify_group_axioms(OpKind::Mul);
    CHECK(rep.closure_ok);
    CHECK(rep.associativity_ok);
    CHECK(rep.neutral_label == L(1));
    CHECK(rep.labels_without_opposite ==
          std::vector<SignedResidue>{L(3), L(6), L(9)});
    CHECK(rep.counterexamples.empty());
}

TEST_CASE("group axioms: addition restricted to the neutral alone") {
    std::array<SignedResidue, 1> universe{L(9)};
    auto rep = verify_group_axioms(OpKind::Add, universe);
    CHECK(rep.closure_ok);
    CHECK(rep.associativity_ok);
    CHECK(rep.neutral_label == L(9));
    CHECK(rep.opposite_pairs.size() == 1);
    CHECK(rep.counterexamples.empty());
}

TEST_CASE("verify_group_axioms rejects non-Add/Mul") {
    CHECK_THROWS_AS(verify_group_axioms(OpKind::Div), std::invalid_argument);
}

TEST_CASE("class operations commute with reduction over representatives") {
    // Every representative pair with |v| <= 10^4, so every label pair.
    const std::int64_t bound = 10000;
    const std::size_t n = static_cast<std::size_t>(2 * bound + 1);

    std::vector<int> lab(n);
    for (std::int64_t v = -bound; v <= bound; ++v)
        lab[static_cast<std::size_t>(v + bound)] = reduce(v).label();

    // class-level result residues, indexed by label residue
    int add_res[9][9], sub_res[9][9], mul_res[9][9];
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) {
            auto ra = SignedResidue::positive_for_residue(a);
            auto rb = SignedResidue::positive_for_residue(b);
            add_res[a][b] = class_add(ra, rb).only().residue();
            sub_res[a][b] = class_sub(ra, rb).only().residue();
            mul_res[a][b] = class_mul(ra, rb).only().residue();
        }

    auto res9 = [](std::int64_t v) { return static_cast<int>(((v % 9) + 9) % 9); };
    std::uint64_t violations = 0;
    for (std::int64_t va = -bound; va <= bound; ++va) {
        if (va == 0) continue;
        int a = ((lab[static_cast<std::size_t>(va + bound)] % 9) + 9) % 9;
        for (std::int64_t vb = -bound; vb <= bound; ++vb) {
            if (vb == 0) continue;
            int b = ((lab[static_cast<std::size_t>(vb + bound)] % 9) + 9) % 9;
            if (res9(va + vb) != add_res[a][b]) ++violations;
            if (res9(va - vb) != sub_res[a][b]) ++violations;
            if (res9(va * vb) != mul_res[a][b]) ++violations;
        }
    }
    CHECK(violations == 0);
}
