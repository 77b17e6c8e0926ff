#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

#include "phimet/errors.hpp"

namespace phimet {

// Relative/absolute tolerances for floating comparisons. Exact values
// ignore them.
struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;
};

class NumericMode {
public:
    static NumericMode floating(Tolerance tol = Tolerance{}) {
        return NumericMode(false, tol);
    }
    static NumericMode exact() { return NumericMode(true, Tolerance{}); }

    bool is_exact() const { return exact_; }
    const Tolerance& tolerance() const { return tol_; }
    std::string name() const { return exact_ ? "exact" : "float"; }

private:
    NumericMode(bool exact, Tolerance tol) : exact_(exact), tol_(tol) {}

    bool exact_;
    Tolerance tol_;
};

// A nonnegative value of the form radicand^(1/degree) with rational
// radicand. Rational inputs have degree 1; power-family folds produce
// higher degrees. Kept canonical: radicand gcd-reduced and the degree
// minimal (exact roots are extracted).
class ExactValue {
public:
    ExactValue() : radicand_(0), degree_(1) {}

    static ExactValue rational(mpq_class q);
    // radicand^(1/degree); throws DomainError for negative radicand or
    // degree 0.
    static ExactValue root(mpq_class radicand, unsigned degree);
    static ExactValue parse(std::string_view lexeme);

    const mpq_class& radicand() const { return radicand_; }
    unsigned degree() const { return degree_; }
    bool is_rational() const { return degree_ == 1; }

    // Total order; exact across mixed degrees.
    int compare(const ExactValue& other) const;
    bool operator==(const ExactValue& other) const { return compare(other) == 0; }

    // value^exp as a rational; requires degree | exp.
    mpq_class pow_rational(unsigned exp) const;

    ExactValue plus(const ExactValue& other) const;
    ExactValue times(const ExactValue& other) const;

    double to_double() const;
    std::string lexeme() const;

private:
    ExactValue(mpq_class q, unsigned degree)
        : radicand_(std::move(q)), degree_(degree) {}
    void normalize();

    mpq_class radicand_;
    unsigned degree_;
};

// A nonnegative distance value, floating or exact per NumericMode.
// Mixing representations in one operation is an internal error.
class Weight {
public:
    static Weight of(double value);
    static Weight of(ExactValue value) { return Weight(std::move(value)); }
    static Weight zero(const NumericMode& mode);
    static Weight one(const NumericMode& mode);

    bool is_exact() const { return std::holds_alternative<ExactValue>(rep_); }
    double as_double() const;
    const ExactValue& exact() const;

    int compare(const Weight& other) const;
    bool operator==(const Weight& other) const { return compare(other) == 0; }
    bool less(const Weight& other) const { return compare(other) < 0; }

    // Tolerance-aware comparisons; exact representations compare exactly.
    bool approx_eq(const Weight& other, const Tolerance& tol) const;
    bool approx_le(const Weight& other, const Tolerance& tol) const;

    std::string lexeme() const;

private:
    explicit Weight(double v) : rep_(v) {}
    explicit Weight(ExactValue v) : rep_(std::move(v)) {}

    std::variant<double, ExactValue> rep_;
};

// Parses a weight lexeme: nonnegative decimal in float mode, <int> or
// <int>/<posint> in exact mode. `line` seeds error locations.
Weight parse_weight_lexeme(std::string_view text, const NumericMode& mode,
                           int line = 0);

// Shortest round-trip representation of a double.
std::string format_double(double value);

}  // namespace phimet
