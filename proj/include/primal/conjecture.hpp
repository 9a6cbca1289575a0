#pragma once

/**
 * @file conjecture.hpp
 * @brief Bounded witness searches and residue-profile checks for the
 *        class-level conjectures: exact witnesses behind a congruence,
 *        the period-6 power cycle, and power-sum residue analyses mod 9.
 */

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "primal/class_algebra.hpp"

namespace primal {

/// Ask whether the congruence-level result of class_a (op) class_b is
/// backed by exact integer witnesses for a concrete target member.
struct WitnessQuery {
    OpKind op = OpKind::Mul;
    SignedResidue class_a;
    SignedResidue class_b;
    std::int64_t target = 0;
    std::int64_t bound = 1;
};

struct WitnessReport {
    WitnessQuery query;
    std::vector<std::pair<std::int64_t, std::int64_t>> witnesses;
    bool exhausted = false;
    bool universal = false;  // every in-bound member of the target's class expressible
    std::uint64_t scanned = 0;
    std::int64_t elapsed_ms = 0;
};

namespace detail {

/// Members of a class with |v| <= bound, ascending magnitude.
inline std::vector<std::int64_t> class_members(SignedResidue label, std::int64_t bound) {
    std::vector<std::int64_t> out;
    if (label.is_null()) return out;
    std::int64_t v = label.label();
    std::int64_t step = v > 0 ? 9 : -9;
    for (; v >= -bound && v <= bound; v += step) out.push_back(v);
    return out;
}

inline bool op_applies(OpKind op, std::int64_t a, std::int64_t b, std::int64_t target) {
    switch (op) {
    case OpKind::Add: return a + b == target;
    case OpKind::Sub: return a - b == target;
    case OpKind::Mul: return a * b == target;
    case OpKind::Div: return b != 0 && a % b == 0 && a / b == target;
    default: return false;
    }
}

} // namespace detail

inline WitnessReport witness_search(const WitnessQuery& q) {
    if (q.bound < 1) throw std::invalid_argument("witness_search: bound must be >= 1");
    if (q.op == OpKind::Pow)
        throw std::invalid_argument("witness_search: Pow queries are not supported");
    if (q.class_a.is_null() || q.class_b.is_null())
        throw std::invalid_argument("witness_search: operand classes must be non-null");

    // Acuna congruence is a necessary condition: the target must reduce
    // into the class-level result set.
    ClassOpOutcome expected;
    switch (q.op) {
    case OpKind::Add: expected = class_add(q.class_a, q.class_b); break;
    case OpKind::Sub: expected = class_sub(q.class_a, q.class_b); break;
    case OpKind::Mul: expected = class_mul(q.class_a, q.class_b); break;
    case OpKind::Div: expected = class_div(q.class_a, q.class_b); break;
    default: break;
    }
    int target_res = reduce(q.target).residue();
    bool consistent = false;
    for (auto r : expected.results)
        if (r.residue() == target_res) consistent = true;
    if (!consistent)
        throw std::invalid_argument(
            "witness_search: target " + std::to_string(q.target) +
            " is not in the class-level result of the query");

    auto t0 = std::chrono::steady_clock::now();
    WitnessReport rep;
    rep.query = q;

    auto as = detail::class_members(q.class_a, q.bound);
    auto bs = detail::class_members(q.class_b, q.bound);

    auto expressible = [&](std::int64_t target) {
        for (auto a : as)
            for (auto b : bs)
                if (detail::op_applies(q.op, a, b, target)) return true;
        return false;
    };

    for (auto a : as)
        for (auto b : bs) {
            ++rep.scanned;
            if (detail::op_applies(q.op, a, b, q.target))
                rep.witnesses.emplace_back(a, b);
        }
    rep.exhausted = true;

    rep.universal = true;
    for (auto t : detail::class_members(reduce(q.target), q.bound))
        if (!expressible(t)) {
            rep.universal = false;
            break;
        }

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

/// n=1 boundary behavior of the power cycle for one label.
struct PowerCycleBoundary {
    SignedResidue label;
    int at_n1 = 0;  // the label's own residue class, positively labeled
    int at_n7 = 0;
    bool cycle_holds_at_n1 = false;
};

struct PowerCycleReport {
    std::int64_t max_n = 0;
    std::uint64_t checks = 0;
    std::vector<std::string> violations;
    std::vector<PowerCycleBoundary> boundary;  // labels 3, 6, 9 at n=1
};

/// Verify class_pow(a, n) == class_pow(a, n+6) for all 18 labels and
/// n in [2, max_n], and report how the cycle behaves at n=1 for the
/// labels where it breaks or degenerates (3, 6, 9).
inline PowerCycleReport power_cycle_check(std::int64_t max_n) {
    if (max_n < 8) throw std::invalid_argument("power_cycle_check: max_n must be >= 8");
    PowerCycleReport rep;
    rep.max_n = max_n;

    std::vector<SignedResidue> labels;
    for (int l = -9; l <= 9; ++l)
        if (l != 0) labels.push_back(SignedResidue::from_label(l));

    for (auto a : labels)
        for (std::int64_t n = 2; n <= max_n; ++n) {
            ++rep.checks;
            if (class_pow(a, n) != class_pow(a, n + 6))
                rep.violations.push_back("label " + std::to_string(a.label()) +
                                         " at n=" + std::to_string(n));
        }

    for (int l : {3, 6, 9}) {
        auto a = SignedResidue::from_label(l);
        PowerCycleBoundary b;
        b.label = a;
        b.at_n1 = SignedResidue::positive_for_residue(a.residue()).label();
        b.at_n7 = class_pow(a, 7).only().label();
        b.cycle_holds_at_n1 = b.at_n1 == b.at_n7;
        rep.boundary.push_back(b);
    }
    return rep;
}

enum class EquationId { ThreeCubes, ThreeNthPowers, FermatLike, SquarePlusCube };

struct ResidueProfile {
    EquationId equation_id = EquationId::ThreeCubes;
    int exponent = 3;
    std::set<int> attainable;  // residues mod 9
    std::map<int, std::array<int, 3>> witness_per_residue;
};

namespace detail {

constexpr int mod_pow9(std::int64_t base, std::int64_t exp) {
    int b = static_cast<int>(((base % 9) + 9) % 9);
    int acc = 1;
    for (std::int64_t i = 0; i < exp; ++i) acc = (acc * b) % 9;
    return acc;
}

} // namespace detail

/// Attainable residues of x^e + y^e + z^e mod 9, exhausted over all 9^3
/// residue triples, with the lexicographically smallest witness each.
inline ResidueProfile three_power_profile(int exponent) {
    if (exponent < 2) throw std::invalid_argument("three_power_profile: exponent must be >= 2");
    ResidueProfile p;
    p.equation_id = exponent == 3 ? EquationId::ThreeCubes : EquationId::ThreeNthPowers;
    p.exponent = exponent;
    for (int x = 0; x < 9; ++x)
        for (int y = 0; y < 9; ++y)
            for (int z = 0; z < 9; ++z) {
                int r = (detail::mod_pow9(x, exponent) + detail::mod_pow9(y, exponent) +
                         detail::mod_pow9(z, exponent)) %
                        9;
                if (!p.attainable.count(r)) {
                    p.attainable.insert(r);
                    p.witness_per_residue[r] = {x, y, z};
                }
            }
    return p;
}

inline ResidueProfile cube_residue_profile() { return three_power_profile(3); }

/// Attainable residues of s^2 + c^3 mod 9 over all residue pairs.
inline ResidueProfile square_plus_cube_profile() {
    ResidueProfile p;
    p.equation_id = EquationId::SquarePlusCube;
    p.exponent = 0;
    for (int s = 0; s < 9; ++s)
        for (int c = 0; c < 9; ++c) {
            int r = (detail::mod_pow9(s, 2) + detail::mod_pow9(c, 3)) % 9;
            if (!p.attainable.count(r)) {
                p.attainable.insert(r);
                p.witness_per_residue[r] = {s, c, 0};
            }
        }
    return p;
}

struct NinthPowerReport {
    std::int64_t bound = 0;
    std::uint64_t checks = 0;
    std::vector<std::int64_t> violations;
};

/// Check x^9 == x^3 (mod 9) for all |x| <= bound; the two three-term
/// power sums are then congruent mod 9 for every triple.
inline NinthPowerReport ninth_power_equiv_check(std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("ninth_power_equiv_check: bound must be >= 1");
    NinthPowerReport rep;
    rep.bound = bound;
    for (std::int64_t x = -bound; x <= bound; ++x) {
        ++rep.checks;
        if (detail::mod_pow9(x, 9) != detail::mod_pow9(x, 3)) rep.violations.push_back(x);
    }
    return rep;
}

struct FermatProfile {
    std::int64_t n = 0;
    std::set<int> lhs_attainable;  // z^n + x^n mod 9
    std::set<int> rhs_attainable;  // k^n mod 9
    std::set<int> intersection;
    bool cycle_stable = false;  // profile(n) == profile(n+6)
};

/// Residue profile of z^n + x^n against k^n mod 9, with the period-6
/// stability check against exponent n+6.
inline FermatProfile fermat_cycle_profile(std::int64_t n) {
    if (n < 2) throw std::domain_error("fermat_cycle_profile: n must be >= 2");
    auto profile_at = [](std::int64_t e) {
        std::pair<std::set<int>, std::set<int>> out;
        for (int z = 0; z < 9; ++z)
            for (int x = 0; x < 9; ++x)
                out.first.insert((detail::mod_pow9(z, e) + detail::mod_pow9(x, e)) % 9);
        for (int k = 0; k < 9; ++k) out.second.insert(detail::mod_pow9(k, e));
        return out;
    };

    FermatProfile p;
    p.n = n;
    auto [lhs, rhs] = profile_at(n);
    p.lhs_attainable = lhs;
    p.rhs_attainable = rhs;
    for (int r : lhs)
        if (rhs.count(r)) p.intersection.insert(r);
    auto [lhs6, rhs6] = profile_at(n + 6);
    p.cycle_stable = lhs == lhs6 && rhs == rhs6;
    return p;
}

} // namespace primal
