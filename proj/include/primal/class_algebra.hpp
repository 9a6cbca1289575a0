#pragma once

/**
 * @file class_algebra.hpp
 * @brief Arithmetic on class labels and exhaustive group-axiom checks.
 *
 * Operations act on labels, not representatives; by congruence the
 * result class is the class of any representative-level result.
 * Addition, subtraction, multiplication and exponentiation are
 * single-valued; division returns the full solution set (0, 1, 3 or 9
 * labels, depending on the divisor's common factor with 9).
 */

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "primal/residue.hpp"

namespace primal {

enum class OpKind { Add, Sub, Mul, Div, Pow };

/// Result set of a class-level operation, ascending by label value.
struct ClassOpOutcome {
    std::vector<SignedResidue> results;

    static ClassOpOutcome single(SignedResidue r) { return ClassOpOutcome{{r}}; }

    bool empty() const { return results.empty(); }
    std::size_t size() const { return results.size(); }

    SignedResidue only() const {
        if (results.size() != 1)
            throw std::logic_error("ClassOpOutcome: not single-valued");
        return results.front();
    }

    bool contains(SignedResidue r) const {
        return std::find(results.begin(), results.end(), r) != results.end();
    }

    void canonicalize() {
        std::sort(results.begin(), results.end());
        results.erase(std::unique(results.begin(), results.end()), results.end());
    }

    friend bool operator==(const ClassOpOutcome&, const ClassOpOutcome&) = default;
};

inline ClassOpOutcome class_add(SignedResidue a, SignedResidue b) {
    return ClassOpOutcome::single(
        SignedResidue::positive_for_residue((a.residue() + b.residue()) % 9));
}

inline ClassOpOutcome class_sub(SignedResidue a, SignedResidue b) {
    return ClassOpOutcome::single(
        SignedResidue::positive_for_residue((a.residue() - b.residue() + 9) % 9));
}

inline ClassOpOutcome class_mul(SignedResidue a, SignedResidue b) {
    return ClassOpOutcome::single(
        SignedResidue::positive_for_residue((a.residue() * b.residue()) % 9));
}

/// All labels c with b*c landing in a's class; empty when unsolvable.
inline ClassOpOutcome class_div(SignedResidue a, SignedResidue b) {
    ClassOpOutcome out;
    for (int c = 1; c <= 9; ++c) {
        SignedResidue cand = SignedResidue::from_label(c);
        if (class_mul(b, cand).only().residue() == a.residue())
            out.results.push_back(cand);
    }
    out.canonicalize();
    return out;
}

/// a^n for n >= 2, via the period-6 exponent cycle: the exponent is
/// first reduced to ((n-2) mod 6) + 2.
inline ClassOpOutcome class_pow(SignedResidue a, std::int64_t n) {
    if (n < 2) throw std::domain_error("class_pow: exponent must be >= 2");
    std::int64_t m = (n - 2) % 6 + 2;
    int r = a.residue();
    int acc = r;
    for (std::int64_t i = 1; i < m; ++i) acc = (acc * r) % 9;
    return ClassOpOutcome::single(SignedResidue::positive_for_residue(acc));
}

/// Relabel to the opposite-sign label of the same residue, e.g. 1 <-> -8.
inline SignedResidue mirror(SignedResidue a) {
    if (a.is_null()) throw std::domain_error("mirror: null class has no mirror");
    int l = a.label();
    if (l > 0) return SignedResidue::from_label(l == 9 ? -9 : l - 9);
    return SignedResidue::from_label(l == -9 ? 9 : l + 9);
}

/// The label o with a + o in the neutral class (label 9).
inline SignedResidue opposite(SignedResidue a) {
    if (a.is_null()) throw std::domain_error("opposite: null class has no opposite");
    return SignedResidue::positive_for_residue((9 - a.residue()) % 9);
}

/// Outcome of exhaustively checking the group axioms for one operation.
struct AxiomReport {
    OpKind op = OpKind::Add;
    bool closure_ok = false;
    bool associativity_ok = false;
    SignedResidue neutral_label;
    std::vector<std::pair<SignedResidue, SignedResidue>> opposite_pairs;
    std::vector<SignedResidue> labels_without_opposite;
    std::optional<bool> cancellation_ok;  // checked for Add only
    std::vector<std::string> counterexamples;

    bool all_ok() const { return counterexamples.empty(); }
};

/// Exhaustive axiom check over a label universe (default: all nine
/// positive labels). Closure and associativity are checked for Add and
/// Mul; opposites and the cancellation law for Add only.
inline AxiomReport verify_group_axioms(
    OpKind op, std::span<const SignedResidue> universe = {}) {
    if (op != OpKind::Add && op != OpKind::Mul)
        throw std::invalid_argument("verify_group_axioms: op must be Add or Mul");

    static const std::array<SignedResidue, 9> kAll = [] {
        std::array<SignedResidue, 9> a{};
        for (int i = 0; i < 9; ++i) a[i] = SignedResidue::from_label(i + 1);
        return a;
    }();
    std::vector<SignedResidue> labels(universe.begin(), universe.end());
    if (labels.empty()) labels.assign(kAll.begin(), kAll.end());

    auto apply = [op](SignedResidue x, SignedResidue y) {
        return op == OpKind::Add ? class_add(x, y).only() : class_mul(x, y).only();
    };
    auto in_universe = [&](SignedResidue r) {
        return std::find(labels.begin(), labels.end(), r) != labels.end();
    };
    auto name = [](SignedResidue r) { return std::to_string(r.label()); };

    AxiomReport rep;
    rep.op = op;

    rep.closure_ok = true;
    for (auto a : labels)
        for (auto b : labels)
            if (!in_universe(apply(a, b))) {
                rep.closure_ok = false;
                rep.counterexamples.push_back(
                    "closure: " + name(a) + "," + name(b));
            }

    rep.associativity_ok = true;
    for (auto a : labels)
        for (auto b : labels)
            for (auto c : labels)
                if (apply(apply(a, b), c) != apply(a, apply(b, c))) {
                    rep.associativity_ok = false;
                    rep.counterexamples.push_back(
                        "associativity: " + name(a) + "," + name(b) + "," + name(c));
                }

    SignedResidue neutral =
        op == OpKind::Add ? SignedResidue::from_label(9) : SignedResidue::from_label(1);
    bool neutral_found = in_universe(neutral);
    for (auto k : labels)
        if (apply(neutral, k) != k || apply(k, neutral) != k) neutral_found = false;
    if (neutral_found) {
        rep.neutral_label = neutral;
    } else {
        rep.counterexamples.push_back("neutral: none");
    }

    for (auto a : labels) {
        bool found = false;
        for (auto o : labels)
            if (apply(a, o) == neutral && apply(o, a) == neutral) {
                rep.opposite_pairs.emplace_back(a, o);
                found = true;
                break;
            }
        if (!found) {
            rep.labels_without_opposite.push_back(a);
            if (op == OpKind::Add)
                rep.counterexamples.push_back("opposite: none for " + name(a));
        }
    }

    if (op == OpKind::Add) {
        bool ok = true;
        for (auto a : labels)
            for (auto b : labels)
                for (auto c : labels)
                    if (a != b && apply(a, c) == apply(b, c)) {
                        ok = false;
                        rep.counterexamples.push_back(
                            "cancellation: " + name(a) + "," + name(b) + "," + name(c));
                    }
        rep.cancellation_ok = ok;
    }

    return rep;
}

} // namespace primal
