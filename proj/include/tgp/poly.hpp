#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tgp/errors.hpp"
#include "tgp/rational.hpp"

namespace tgp {

// Exact multivariate polynomial with Int coefficients over a fixed, ordered
// variable set. No zero coefficients are stored; arithmetic requires equal
// variable sets.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly zero(std::vector<std::string> vars) { return MultiPoly(std::move(vars)); }
    static MultiPoly constant(std::vector<std::string> vars, const Int& c);
    static MultiPoly variable(std::vector<std::string> vars, const std::string& name, int power = 1);
    // A single monomial c * prod(vars^exps).
    static MultiPoly monomial(std::vector<std::string> vars, const Exponents& exps, const Int& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Exponents& exps, const Int& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly operator*(const Int& c) const;
    bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(unsigned n) const;

    // Exact evaluation; point must cover all variables.
    Rat eval(const std::map<std::string, Rat>& point) const;

    // Substitute each variable by a polynomial over `target_vars`. Every
    // variable of *this must be mapped.
    MultiPoly subst(const std::vector<std::string>& target_vars,
                    const std::map<std::string, MultiPoly>& images) const;

    int degree(const std::string& var) const;
    int total_degree() const;

    std::string str() const;

private:
    void check_same_vars(const MultiPoly& o) const;

    std::vector<std::string> vars_;
    std::map<Exponents, Int> terms_;
};

using Point = std::map<std::string, Rat>;
using PointFn = std::function<Rat(const Point&)>;

// Deterministic grid-based polynomial identity test. Compares lhs and rhs on
// an integer grid holding (degree bound + 1) admissible points per variable;
// the grid is shifted until no grid point hits `excluded`. If a
// counterexample pointer is supplied, the first failing point is stored.
bool identity_check(const PointFn& lhs, const PointFn& rhs,
                    const std::map<std::string, int>& degree_bounds,
                    const std::function<bool(const Point&)>& excluded,
                    Point* counterexample = nullptr);

inline bool identity_check(const PointFn& lhs, const PointFn& rhs,
                           const std::map<std::string, int>& degree_bounds) {
    return identity_check(lhs, rhs, degree_bounds, [](const Point&) { return false; });
}

}  // namespace tgp
