#pragma once

/**
 * @file residue.hpp
 * @brief Signed digital-root reduction over base-10 integers, modulus 9.
 *
 * Every nonzero integer collapses to a single label in {-9..-1, 1..9}
 * by repeated digit summing; zero forms its own null class. The labels
 * are congruence classes mod 9 restricted to one sign, with 9 and -9
 * both standing for residue 0. Nonzero integers additionally carry a
 * 1-based row index, giving a lossless (label, row) coordinate form.
 */

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace primal {

namespace detail {

// Floored division: quotient toward negative infinity, remainder
// carries the divisor's sign.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
    return a - b * floor_div(a, b);
}

} // namespace detail

/// A class label: one of {-9..-1}, {1..9}, or the null class (zero).
class SignedResidue {
public:
    constexpr SignedResidue() = default;

    static constexpr SignedResidue null() { return SignedResidue{}; }

    static constexpr SignedResidue from_label(int label) {
        if (label < -9 || label > 9 || label == 0)
            throw std::invalid_argument("SignedResidue: label must be in -9..-1 or 1..9");
        SignedResidue r;
        r.label_ = label;
        return r;
    }

    /// Canonical positive label for a residue in [0, 9): 0 maps to 9.
    static constexpr SignedResidue positive_for_residue(int residue) {
        return from_label(residue == 0 ? 9 : residue);
    }

    /// Canonical negative label for a residue in [0, 9): 0 maps to -9.
    static constexpr SignedResidue negative_for_residue(int residue) {
        return from_label(residue == 0 ? -9 : residue - 9);
    }

    constexpr bool is_null() const { return label_ == 0; }

    /// Label value; 0 for the null class.
    constexpr int label() const { return label_; }

    /// Residue mod 9 in [0, 9). Null, 9 and -9 all give 0.
    constexpr int residue() const {
        return static_cast<int>(detail::floor_mod(label_, 9));
    }

    friend constexpr bool operator==(SignedResidue, SignedResidue) = default;
    friend constexpr auto operator<=>(SignedResidue a, SignedResidue b) {
        return a.label_ <=> b.label_;
    }

private:
    int label_ = 0;
};

/// Compressed coordinate of a nonzero integer: class label plus 1-based row.
struct MatrixCoord {
    SignedResidue label;
    std::int64_t row = 1;

    friend constexpr bool operator==(const MatrixCoord&, const MatrixCoord&) = default;
};

/// One run of iterated digit summing down to a fixed point.
struct IterationTrace {
    std::int64_t start = 0;
    std::vector<std::int64_t> steps;  // successive digit sums, excluding start
    SignedResidue fixed_point;
    int k = 0;  // number of digit-sum applications
};

/// Sum of base-10 digit values of |v|, negated when v < 0.
constexpr std::int64_t digit_sum(std::int64_t v) {
    std::int64_t s = 0;
    std::int64_t m = v < 0 ? -v : v;
    while (m > 0) {
        s += m % 10;
        m /= 10;
    }
    return v < 0 ? -s : s;
}

/// Repeated digit summing until the unique single-digit fixed point.
inline IterationTrace iterated_digital_root(std::int64_t v) {
    IterationTrace t;
    t.start = v;
    std::int64_t cur = v;
    while (cur > 9 || cur < -9) {
        cur = digit_sum(cur);
        t.steps.push_back(cur);
        ++t.k;
    }
    t.fixed_point = cur == 0 ? SignedResidue::null()
                             : SignedResidue::from_label(static_cast<int>(cur));
    return t;
}

/// Closed-form digital root for v >= 1: v - 9*floor((v-1)/9), in {1..9}.
constexpr SignedResidue novem_root_positive(std::int64_t v) {
    if (v < 1) throw std::domain_error("novem_root_positive: v must be positive");
    return SignedResidue::from_label(static_cast<int>(v - 9 * detail::floor_div(v - 1, 9)));
}

/// Closed-form digital root for v <= -1 via the floored remainder:
/// ((v+1) mod -9) - 1, in {-9..-1}.
constexpr SignedResidue novem_root_negative(std::int64_t v) {
    if (v > -1) throw std::domain_error("novem_root_negative: v must be negative");
    return SignedResidue::from_label(static_cast<int>(detail::floor_mod(v + 1, -9) - 1));
}

/// The same reduction through the floor-function route:
/// v - (-9)*floor((v+1)/(-9)). Kept separate so the two routes can be
/// checked against each other.
constexpr SignedResidue novem_root_negative_floor(std::int64_t v) {
    if (v > -1) throw std::domain_error("novem_root_negative_floor: v must be negative");
    return SignedResidue::from_label(static_cast<int>(v + 9 * detail::floor_div(v + 1, -9)));
}

/// Reduce any integer to its class label; 0 maps to the null class.
constexpr SignedResidue reduce(std::int64_t v) {
    if (v == 0) return SignedResidue::null();
    return v > 0 ? novem_root_positive(v) : novem_root_negative(v);
}

/// 1-based row of a nonzero integer: (|v| - |label|)/9 + 1.
constexpr std::int64_t row_index(std::int64_t v) {
    if (v == 0) throw std::domain_error("row_index: the null class has no row");
    std::int64_t mag = v < 0 ? -v : v;
    int lab = reduce(v).label();
    std::int64_t labmag = lab < 0 ? -lab : lab;
    return (mag - labmag) / 9 + 1;
}

/// Row by the two-case definition (multiples of 9 vs the rest), used as
/// an alternative route against the closed form above.
constexpr std::int64_t row_index_by_cases(std::int64_t v) {
    if (v == 0) throw std::domain_error("row_index_by_cases: the null class has no row");
    std::int64_t mag = v < 0 ? -v : v;
    if (mag % 9 == 0) return mag / 9;
    return mag / 9 + 1;
}

constexpr MatrixCoord encode(std::int64_t v) {
    if (v == 0) throw std::domain_error("encode: 0 has no matrix coordinate");
    return MatrixCoord{reduce(v), row_index(v)};
}

/// Inverse of encode: k + 9*(row-1) for positive labels, mirrored for
/// negative labels.
constexpr std::int64_t decode(const MatrixCoord& c) {
    if (c.row < 1) throw std::domain_error("decode: row must be >= 1");
    if (c.label.is_null()) throw std::domain_error("decode: null class has no coordinate");
    int lab = c.label.label();
    if (lab > 0) return lab + 9 * (c.row - 1);
    return lab - 9 * (c.row - 1);
}

} // namespace primal
