#include "phimet/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>

namespace phimet {

namespace {

const PhiTransform& registered_transform(const std::string& name) {
    static const std::vector<PhiTransform> registry = {
        {"square", [](double x) { return x * x; },
         [](double t) { return std::sqrt(t); }},
        {"exp1", [](double x) { return std::expm1(x); },
         [](double t) { return std::log1p(t); }},
    };
    for (const auto& t : registry)
        if (t.name == name) return t;
    throw ParseError("unknown transform 'phi:" + name +
                     "' (registered: square, exp1)");
}

}  // namespace

TriangleFamily TriangleFamily::additive() {
    return TriangleFamily(FamilyKind::Additive, "additive");
}

TriangleFamily TriangleFamily::max() {
    return TriangleFamily(FamilyKind::Max, "max");
}

TriangleFamily TriangleFamily::multiplicative() {
    return TriangleFamily(FamilyKind::Multiplicative, "multiplicative");
}

TriangleFamily TriangleFamily::power(double exponent) {
    if (!std::isfinite(exponent) || exponent <= 0)
        throw DomainError("power exponent must be positive");
    TriangleFamily f(FamilyKind::Power, "power:" + format_double(exponent));
    f.power_ = exponent;
    return f;
}

TriangleFamily TriangleFamily::phi(const PhiTransform& transform) {
    TriangleFamily f(FamilyKind::PhiHomeomorphism, "phi:" + transform.name);
    f.transform_ = transform;
    return f;
}

TriangleFamily TriangleFamily::phi(const std::string& registered_name) {
    return phi(registered_transform(registered_name));
}

TriangleFamily TriangleFamily::parse(std::string_view spec) {
    std::string s(spec);
    if (s == "additive") return additive();
    if (s == "max") return max();
    if (s == "multiplicative") return multiplicative();
    if (s.rfind("power:", 0) == 0) {
        std::string arg = s.substr(6);
        char* end = nullptr;
        double p = std::strtod(arg.c_str(), &end);
        if (arg.empty() || end != arg.c_str() + arg.size())
            throw ParseError("bad power exponent '" + arg + "'");
        if (!std::isfinite(p) || p <= 0)
            throw ParseError("power exponent must be positive, got '" + arg + "'");
        return power(p);
    }
    if (s.rfind("phi:", 0) == 0) return phi(s.substr(4));
    throw ParseError("unknown family '" + s +
                     "' (expected additive, max, multiplicative, power:<p> or "
                     "phi:<name>)");
}

bool TriangleFamily::exact_capable() const {
    switch (kind_) {
        case FamilyKind::Additive:
        case FamilyKind::Max:
        case FamilyKind::Multiplicative:
            return true;
        case FamilyKind::Power:
            return power_ >= 1.0 && power_ == std::floor(power_);
        case FamilyKind::PhiHomeomorphism:
            return false;
    }
    return false;
}

void TriangleFamily::require_mode(const NumericMode& mode) const {
    if (mode.is_exact() && !exact_capable())
        throw UnsupportedTransform("family '" + name_ +
                                   "' has no exact mode (supported: additive, "
                                   "max, multiplicative, power:<integer>)");
}

Weight TriangleFamily::identity(const NumericMode& mode) const {
    require_mode(mode);
    return kind_ == FamilyKind::Multiplicative ? Weight::one(mode)
                                               : Weight::zero(mode);
}

Weight TriangleFamily::domain_floor(const NumericMode& mode) const {
    require_mode(mode);
    return kind_ == FamilyKind::Multiplicative ? Weight::one(mode)
                                               : Weight::zero(mode);
}

void TriangleFamily::check_domain(const Weight& x) const {
    if (kind_ != FamilyKind::Multiplicative) return;
    Weight floor = x.is_exact() ? Weight::one(NumericMode::exact())
                                : Weight::one(NumericMode::floating());
    if (x.less(floor))
        throw DomainError("multiplicative weight " + x.lexeme() +
                          " is below the domain floor 1");
}

double TriangleFamily::raw_eval(double x, double y) const {
    switch (kind_) {
        case FamilyKind::Additive:
            return x + y;
        case FamilyKind::Max:
            return std::max(x, y);
        case FamilyKind::Multiplicative:
            return x * y;
        case FamilyKind::Power:
            return std::pow(std::pow(x, power_) + std::pow(y, power_),
                            1.0 / power_);
        case FamilyKind::PhiHomeomorphism:
            return transform_.inverse(transform_.forward(x) +
                                      transform_.forward(y));
    }
    throw InternalError("unreachable family kind");
}

Weight TriangleFamily::eval_unchecked(const Weight& x, const Weight& y) const {
    if (x.is_exact() != y.is_exact())
        throw InternalError("mixed float/exact operands");
    if (!x.is_exact()) return Weight::of(raw_eval(x.as_double(), y.as_double()));

    const ExactValue& a = x.exact();
    const ExactValue& b = y.exact();
    switch (kind_) {
        case FamilyKind::Additive:
            return Weight::of(a.plus(b));
        case FamilyKind::Max:
            return x.compare(y) >= 0 ? x : y;
        case FamilyKind::Multiplicative:
            return Weight::of(a.times(b));
        case FamilyKind::Power: {
            if (!exact_capable())
                throw UnsupportedTransform(
                    "exact power weights need an integer exponent");
            auto p = static_cast<unsigned>(power_);
            return Weight::of(
                ExactValue::root(a.pow_rational(p) + b.pow_rational(p), p));
        }
        case FamilyKind::PhiHomeomorphism:
            throw UnsupportedTransform("family '" + name_ +
                                       "' has no exact mode");
    }
    throw InternalError("unreachable family kind");
}

Weight TriangleFamily::eval(const Weight& x, const Weight& y) const {
    check_domain(x);
    check_domain(y);
    return eval_unchecked(x, y);
}

Weight TriangleFamily::fold(std::span<const Weight> xs) const {
    if (xs.empty()) throw EmptyInput("fold over an empty sequence");
    check_domain(xs.back());
    Weight acc = xs.back();
    for (auto it = xs.rbegin() + 1; it != xs.rend(); ++it) {
        check_domain(*it);
        acc = eval_unchecked(*it, acc);
    }
    return acc;
}

double TriangleFamily::phi_forward(double x) const {
    switch (kind_) {
        case FamilyKind::Additive:
            return x;
        case FamilyKind::Power:
            return std::pow(x, power_);
        case FamilyKind::Multiplicative:
            if (x < 1.0)
                throw DomainError("multiplicative transform needs x >= 1");
            return std::log(x);
        case FamilyKind::PhiHomeomorphism:
            return transform_.forward(x);
        case FamilyKind::Max:
            throw UnsupportedTransform("max has no additive transform");
    }
    throw InternalError("unreachable family kind");
}

double TriangleFamily::phi_inverse(double t) const {
    switch (kind_) {
        case FamilyKind::Additive:
            return t;
        case FamilyKind::Power:
            return std::pow(t, 1.0 / power_);
        case FamilyKind::Multiplicative:
            return std::exp(t);
        case FamilyKind::PhiHomeomorphism:
            return transform_.inverse(t);
        case FamilyKind::Max:
            throw UnsupportedTransform("max has no additive transform");
    }
    throw InternalError("unreachable family kind");
}

bool ValidationReport::all_passed() const {
    return std::all_of(axioms.begin(), axioms.end(),
                       [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult* ValidationReport::find(std::string_view axiom) const {
    for (const auto& r : axioms)
        if (r.axiom == axiom) return &r;
    return nullptr;
}

std::vector<double> default_grid(const TriangleFamily& family) {
    if (family.kind() == FamilyKind::Multiplicative)
        return {1.0, 1.25, 1.5, 2.0, 3.0, 5.0, 10.0};
    return {0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0};
}

namespace {

double slack_of(double a, double b, const Tolerance& tol) {
    return std::max(tol.abs, tol.rel * std::max(std::abs(a), std::abs(b)));
}

bool close(double a, double b, const Tolerance& tol) {
    return std::abs(a - b) <= slack_of(a, b, tol);
}

bool leq(double a, double b, const Tolerance& tol) {
    return a <= b + slack_of(a, b, tol);
}

std::string num(double v) { return format_double(v); }

class AxiomProbe {
public:
    explicit AxiomProbe(std::string name) : result_{std::move(name), true, ""} {}

    // Records the first counterexample only.
    void fail(const std::string& counterexample) {
        if (!result_.passed) return;
        result_.passed = false;
        result_.counterexample = counterexample;
    }

    bool still_passing() const { return result_.passed; }
    AxiomResult take() { return std::move(result_); }

private:
    AxiomResult result_;
};

double raw_fold(const TriangleFamily& f, const std::vector<double>& xs) {
    double acc = xs.back();
    for (auto it = xs.rbegin() + 1; it != xs.rend(); ++it)
        acc = f.raw_eval(*it, acc);
    return acc;
}

}  // namespace

ValidationReport validate_family(const TriangleFamily& family,
                                 const SampleSpec& spec) {
    std::vector<double> grid =
        spec.grid.empty() ? default_grid(family) : spec.grid;
    grid.insert(grid.end(), spec.extra_values.begin(), spec.extra_values.end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    const Tolerance& tol = spec.tol;
    std::mt19937_64 rng(spec.seed);

    ValidationReport report;

    AxiomProbe symmetry("symmetry");
    for (double x : grid)
        for (double y : grid) {
            double a = family.raw_eval(x, y), b = family.raw_eval(y, x);
            if (!close(a, b, tol)) {
                symmetry.fail("Phi(" + num(x) + ", " + num(y) + ") = " + num(a) +
                              " but Phi(" + num(y) + ", " + num(x) + ") = " +
                              num(b));
                break;
            }
        }
    report.axioms.push_back(symmetry.take());

    AxiomProbe monotone("monotonicity");
    for (size_t i = 0; i + 1 < grid.size() && monotone.still_passing(); ++i)
        for (double y : grid) {
            double lo = family.raw_eval(grid[i], y);
            double hi = family.raw_eval(grid[i + 1], y);
            if (!leq(lo, hi, tol)) {
                monotone.fail("Phi(" + num(grid[i]) + ", " + num(y) + ") = " +
                              num(lo) + " > Phi(" + num(grid[i + 1]) + ", " +
                              num(y) + ") = " + num(hi));
                break;
            }
        }
    report.axioms.push_back(monotone.take());

    AxiomProbe identity("identity-at-origin");
    {
        double e = family.kind() == FamilyKind::Multiplicative ? 1.0 : 0.0;
        double v = family.raw_eval(e, e);
        if (!close(v, e, tol))
            identity.fail("Phi(" + num(e) + ", " + num(e) + ") = " + num(v));
        for (double x : grid) {
            if (!identity.still_passing()) break;
            if (family.kind() == FamilyKind::Multiplicative && x < 1.0) continue;
            double v2 = family.raw_eval(x, e);
            if (!close(v2, x, tol))
                identity.fail("Phi(" + num(x) + ", " + num(e) + ") = " + num(v2) +
                              " != " + num(x));
        }
    }
    report.axioms.push_back(identity.take());

    AxiomProbe exchange("exchange");
    for (double x : grid) {
        if (!exchange.still_passing()) break;
        for (double y : grid) {
            if (!exchange.still_passing()) break;
            for (double z : grid) {
                double a = family.raw_eval(x, family.raw_eval(y, z));
                double b = family.raw_eval(z, family.raw_eval(x, y));
                if (!close(a, b, tol)) {
                    exchange.fail("Phi(" + num(x) + ", Phi(" + num(y) + ", " +
                                  num(z) + ")) = " + num(a) + " but Phi(" +
                                  num(z) + ", Phi(" + num(x) + ", " + num(y) +
                                  ")) = " + num(b));
                    break;
                }
            }
        }
    }
    report.axioms.push_back(exchange.take());

    AxiomProbe multiset("multiset-bound");
    {
        std::uniform_int_distribution<size_t> idx(0, grid.size() - 1);
        std::uniform_int_distribution<int> part_size(1, 3);
        for (int s = 0; s < spec.multiset_samples && multiset.still_passing();
             ++s) {
            std::vector<double> b, c;
            for (int i = part_size(rng); i > 0; --i) b.push_back(grid[idx(rng)]);
            for (int i = part_size(rng); i > 0; --i) c.push_back(grid[idx(rng)]);
            std::vector<double> pool = b;
            pool.insert(pool.end(), c.begin(), c.end());
            std::shuffle(pool.begin(), pool.end(), rng);
            std::uniform_int_distribution<size_t> sub(1, pool.size());
            std::vector<double> a(pool.begin(),
                                  pool.begin() + static_cast<long>(sub(rng)));
            double lhs = raw_fold(family, a);
            double rhs = family.raw_eval(raw_fold(family, b), raw_fold(family, c));
            if (!leq(lhs, rhs, tol)) {
                std::ostringstream msg;
                msg << "fold of sub-multiset = " << num(lhs)
                    << " exceeds combined folds = " << num(rhs);
                multiset.fail(msg.str());
            }
        }
    }
    report.axioms.push_back(multiset.take());

    AxiomProbe domination("max-domination");
    for (double x : grid) {
        if (!domination.still_passing()) break;
        for (double y : grid) {
            double v = family.raw_eval(x, y);
            if (!leq(std::max(x, y), v, tol)) {
                domination.fail("Phi(" + num(x) + ", " + num(y) + ") = " +
                                num(v) + " < max(" + num(x) + ", " + num(y) +
                                ")");
                break;
            }
        }
    }
    report.axioms.push_back(domination.take());

    AxiomProbe permutation("permutation-invariance");
    {
        std::uniform_int_distribution<size_t> idx(0, grid.size() - 1);
        std::uniform_int_distribution<int> len(2, 6);
        for (int s = 0;
             s < spec.permutation_samples && permutation.still_passing(); ++s) {
            std::vector<double> xs;
            for (int i = len(rng); i > 0; --i) xs.push_back(grid[idx(rng)]);
            std::vector<double> shuffled = xs;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            double a = raw_fold(family, xs), b = raw_fold(family, shuffled);
            if (!close(a, b, tol)) {
                std::ostringstream msg;
                msg << "fold = " << num(a) << " but permuted fold = " << num(b);
                permutation.fail(msg.str());
            }
        }
    }
    report.axioms.push_back(permutation.take());

    if (family.kind() == FamilyKind::PhiHomeomorphism) {
        AxiomProbe zero("transform-zero");
        double at0 = family.phi_forward(0.0);
        if (!close(at0, 0.0, tol))
            zero.fail("forward(0) = " + num(at0));
        report.axioms.push_back(zero.take());

        AxiomProbe increasing("transform-increasing");
        for (size_t i = 0; i + 1 < grid.size(); ++i) {
            double a = family.phi_forward(grid[i]);
            double b = family.phi_forward(grid[i + 1]);
            if (!(a < b)) {
                increasing.fail("forward(" + num(grid[i]) + ") = " + num(a) +
                                " !< forward(" + num(grid[i + 1]) + ") = " +
                                num(b));
                break;
            }
        }
        report.axioms.push_back(increasing.take());

        AxiomProbe roundtrip("transform-roundtrip");
        for (double x : grid) {
            double back = family.phi_inverse(family.phi_forward(x));
            if (!close(back, x, tol)) {
                roundtrip.fail("inverse(forward(" + num(x) + ")) = " + num(back));
                break;
            }
        }
        report.axioms.push_back(roundtrip.take());
    }

    return report;
}

}  // namespace phimet
