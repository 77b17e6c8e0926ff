#include "phimet/numeric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace phimet {

namespace {

bool is_perfect_power(const mpz_class& n, unsigned long exp, mpz_class& root) {
    if (exp == 1) {
        root = n;
        return true;
    }
    mpz_class r;
    int exactflag = mpz_root(r.get_mpz_t(), n.get_mpz_t(), exp);
    if (exactflag == 0) return false;
    root = r;
    return true;
}

mpq_class pow_mpq(const mpq_class& q, unsigned long exp) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), exp);
    mpq_class out(num, den);
    out.canonicalize();
    return out;
}

}  // namespace

ExactValue ExactValue::rational(mpq_class q) {
    if (sgn(q) < 0)
        throw DomainError("negative value not representable: " + q.get_str());
    q.canonicalize();
    return ExactValue(std::move(q), 1);
}

ExactValue ExactValue::root(mpq_class radicand, unsigned degree) {
    if (degree == 0) throw DomainError("root degree must be positive");
    if (sgn(radicand) < 0)
        throw DomainError("negative radicand: " + radicand.get_str());
    radicand.canonicalize();
    ExactValue v(std::move(radicand), degree);
    v.normalize();
    return v;
}

void ExactValue::normalize() {
    if (degree_ == 1) return;
    if (radicand_ == 0 || radicand_ == 1) {
        degree_ = 1;
        return;
    }
    // Extract exact p-th roots for every prime factor p of the degree.
    unsigned k = degree_;
    for (unsigned p = 2; p <= k; ++p) {
        while (k % p == 0) {
            mpz_class rn, rd;
            if (is_perfect_power(mpz_class(radicand_.get_num()), p, rn) &&
                is_perfect_power(mpz_class(radicand_.get_den()), p, rd)) {
                radicand_ = mpq_class(rn, rd);
                radicand_.canonicalize();
                k /= p;
            } else {
                break;
            }
        }
    }
    degree_ = k;
}

int ExactValue::compare(const ExactValue& other) const {
    if (degree_ == other.degree_) return cmp(radicand_, other.radicand_);
    unsigned l = std::lcm(degree_, other.degree_);
    mpq_class a = pow_mpq(radicand_, l / degree_);
    mpq_class b = pow_mpq(other.radicand_, l / other.degree_);
    return cmp(a, b);
}

mpq_class ExactValue::pow_rational(unsigned exp) const {
    if (exp == 0) return mpq_class(1);
    if (exp % degree_ != 0)
        throw InternalError("exponent " + std::to_string(exp) +
                            " incompatible with root degree " +
                            std::to_string(degree_));
    return pow_mpq(radicand_, exp / degree_);
}

ExactValue ExactValue::plus(const ExactValue& other) const {
    if (degree_ != 1 || other.degree_ != 1)
        throw InternalError("sum of irrational exact values");
    return rational(radicand_ + other.radicand_);
}

ExactValue ExactValue::times(const ExactValue& other) const {
    if (degree_ != 1 || other.degree_ != 1)
        throw InternalError("product of irrational exact values");
    return rational(radicand_ * other.radicand_);
}

double ExactValue::to_double() const {
    double base = radicand_.get_d();
    if (degree_ == 1) return base;
    return std::pow(base, 1.0 / static_cast<double>(degree_));
}

std::string ExactValue::lexeme() const {
    if (degree_ == 1) return radicand_.get_str();
    return "(" + radicand_.get_str() + ")^(1/" + std::to_string(degree_) + ")";
}

ExactValue ExactValue::parse(std::string_view lexeme) {
    std::string s(lexeme);
    if (s.empty()) throw ParseError("empty weight");
    if (s.find_first_not_of("0123456789/") != std::string::npos)
        throw ParseError("bad exact weight '" + s + "'");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        if (slash == 0 || slash + 1 >= s.size() ||
            s.find('/', slash + 1) != std::string::npos)
            throw ParseError("bad exact weight '" + s + "'");
        mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        mpq_class q(num, den);
        q.canonicalize();
        return rational(q);
    }
    return rational(mpq_class(s));
}

Weight Weight::of(double value) {
    if (!std::isfinite(value))
        throw DomainError("weight must be finite");
    if (value < 0)
        throw DomainError("negative weight " + format_double(value));
    return Weight(value);
}

Weight Weight::zero(const NumericMode& mode) {
    return mode.is_exact() ? Weight(ExactValue::rational(mpq_class(0)))
                           : Weight(0.0);
}

Weight Weight::one(const NumericMode& mode) {
    return mode.is_exact() ? Weight(ExactValue::rational(mpq_class(1)))
                           : Weight(1.0);
}

double Weight::as_double() const {
    if (const double* d = std::get_if<double>(&rep_)) return *d;
    return std::get<ExactValue>(rep_).to_double();
}

const ExactValue& Weight::exact() const {
    if (!is_exact()) throw InternalError("float weight has no exact form");
    return std::get<ExactValue>(rep_);
}

int Weight::compare(const Weight& other) const {
    if (is_exact() != other.is_exact())
        throw InternalError("mixed float/exact weight comparison");
    if (is_exact())
        return std::get<ExactValue>(rep_).compare(std::get<ExactValue>(other.rep_));
    double a = std::get<double>(rep_), b = std::get<double>(other.rep_);
    if (a < b) return -1;
    if (a > b) return 1;
    return 0;
}

namespace {
double slack(double a, double b, const Tolerance& tol) {
    return std::max(tol.abs, tol.rel * std::max(std::abs(a), std::abs(b)));
}
}  // namespace

bool Weight::approx_eq(const Weight& other, const Tolerance& tol) const {
    if (is_exact()) return compare(other) == 0;
    double a = as_double(), b = other.as_double();
    return std::abs(a - b) <= slack(a, b, tol);
}

bool Weight::approx_le(const Weight& other, const Tolerance& tol) const {
    if (is_exact()) return compare(other) <= 0;
    double a = as_double(), b = other.as_double();
    return a <= b + slack(a, b, tol);
}

std::string Weight::lexeme() const {
    if (is_exact()) return std::get<ExactValue>(rep_).lexeme();
    return format_double(std::get<double>(rep_));
}

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

Weight parse_weight_lexeme(std::string_view text, const NumericMode& mode,
                           int line) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty weight", line);
    if (mode.is_exact()) {
        bool negative = s[0] == '-';
        std::string body = negative ? s.substr(1) : s;
        try {
            ExactValue v = ExactValue::parse(body);
            if (negative)
                throw NegativeWeight("negative weight '" + s + "'", line);
            return Weight::of(std::move(v));
        } catch (const NegativeWeight&) {
            throw;
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) +
                                 " (exact mode accepts <int> or <int>/<posint>)",
                             line);
        }
    }
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        throw ParseError("bad weight '" + s + "'", line);
    if (!std::isfinite(v)) throw ParseError("weight must be finite", line);
    if (v < 0) throw NegativeWeight("negative weight '" + s + "'", line);
    return Weight::of(v);
}

}  // namespace phimet
