#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phimet/numeric.hpp"

namespace phimet {

enum class FamilyKind { Additive, Max, Multiplicative, Power, PhiHomeomorphism };

// A strictly increasing map on [0,inf) with forward(0) = 0, paired with
// its inverse. Drives the phi-sum family and float-mode transforms.
struct PhiTransform {
    std::string name;
    std::function<double(double)> forward;
    std::function<double(double)> inverse;
};

// A binary operation on nonnegative weights that is symmetric, monotone
// in each argument and dominates max. Combining two leg distances with
// it bounds the third side, generalizing the triangle inequality.
class TriangleFamily {
public:
    static TriangleFamily additive();
    static TriangleFamily max();
    static TriangleFamily multiplicative();
    static TriangleFamily power(double exponent);
    static TriangleFamily phi(const PhiTransform& transform);
    // Registered transforms: "square" (x^2), "exp1" (e^x - 1).
    static TriangleFamily phi(const std::string& registered_name);

    // Grammar: additive | max | multiplicative | power:<p> | phi:<name>.
    static TriangleFamily parse(std::string_view spec);

    FamilyKind kind() const { return kind_; }
    double power_exponent() const { return power_; }
    const std::string& name() const { return name_; }

    // Exact arithmetic stays closed over rationals for these families;
    // power requires an integer exponent (compared in the power domain).
    bool exact_capable() const;
    void require_mode(const NumericMode& mode) const;

    // Neutral element e with combine(x, e) = x. Zero everywhere except
    // the multiplicative family, whose self-distance is 1.
    Weight identity(const NumericMode& mode) const;
    // Smallest admissible weight: 0, or 1 for the multiplicative family.
    Weight domain_floor(const NumericMode& mode) const;

    Weight eval(const Weight& x, const Weight& y) const;
    // n-ary combine, right-nested: f(x1, f(x2, ... f(x_{n-1}, x_n))).
    Weight fold(std::span<const Weight> xs) const;

    // Formula without the domain-floor check; used by the validator to
    // probe axioms on arbitrary sample points.
    double raw_eval(double x, double y) const;

    // Float-mode transform with combine(x,y) = inverse(forward(x) +
    // forward(y)). Unsupported for max.
    double phi_forward(double x) const;
    double phi_inverse(double t) const;

private:
    TriangleFamily(FamilyKind kind, std::string name)
        : kind_(kind), name_(std::move(name)) {}

    void check_domain(const Weight& x) const;
    Weight eval_unchecked(const Weight& x, const Weight& y) const;

    FamilyKind kind_;
    std::string name_;
    double power_ = 0.0;
    PhiTransform transform_;
};

inline constexpr unsigned long long kDefaultSeed = 87539319ull;

struct AxiomResult {
    std::string axiom;
    bool passed = true;
    std::string counterexample;  // empty when passed
};

struct ValidationReport {
    std::vector<AxiomResult> axioms;
    bool all_passed() const;
    const AxiomResult* find(std::string_view axiom) const;
};

// Sample points and budgets for axiom validation. An empty grid selects
// the family default. Points below the domain floor are probed as given
// so that broken configurations surface as counterexamples.
struct SampleSpec {
    std::vector<double> grid;
    std::vector<double> extra_values;
    int multiset_samples = 2000;
    int permutation_samples = 2000;
    unsigned long long seed = kDefaultSeed;
    Tolerance tol;
};

std::vector<double> default_grid(const TriangleFamily& family);

// Samples symmetry, monotonicity, the identity law, associative
// commutation, the multiset bound, max-domination and permutation
// invariance of the fold. Failures are reported, not raised.
ValidationReport validate_family(const TriangleFamily& family,
                                 const SampleSpec& spec);

}  // namespace phimet
