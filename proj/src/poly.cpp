#include "tgp/poly.hpp"

#include <algorithm>
#include <sstream>

namespace tgp {

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Int& c) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name, int power) {
    MultiPoly p(std::move(vars));
    auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
    if (it == p.vars_.end()) throw MissingVariable(name);
    Exponents e(p.vars_.size(), 0);
    e[static_cast<std::size_t>(it - p.vars_.begin())] = power;
    p.terms_[e] = 1;
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, const Exponents& exps, const Int& c) {
    MultiPoly p(std::move(vars));
    if (exps.size() != p.vars_.size()) throw VariableMismatch("monomial exponent arity mismatch");
    if (c != 0) p.terms_[exps] = c;
    return p;
}

void MultiPoly::add_term(const Exponents& exps, const Int& c) {
    if (exps.size() != vars_.size()) throw VariableMismatch("term exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_same_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw VariableMismatch("operands have different variable sets");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r(vars_);
    Exponents e(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Int& c) const {
    MultiPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly r = constant(vars_, 1);
    MultiPoly base = *this;
    while (n > 0) {
        if (n & 1u) r = r * base;
        base = base * base;
        n >>= 1u;
    }
    return r;
}

Rat MultiPoly::eval(const std::map<std::string, Rat>& point) const {
    std::vector<Rat> values(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it == point.end()) throw MissingVariable(vars_[i]);
        values[i] = it->second;
    }
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat term(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) term *= rat_pow(values[i], e[i]);
        }
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::subst(const std::vector<std::string>& target_vars,
                           const std::map<std::string, MultiPoly>& images) const {
    std::vector<const MultiPoly*> imgs(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = images.find(vars_[i]);
        if (it == images.end()) throw MissingVariable(vars_[i]);
        if (it->second.vars() != target_vars)
            throw VariableMismatch("substitution image over wrong variable set");
        imgs[i] = &it->second;
    }
    // Cache image powers as they recur across terms.
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    auto image_pow = [&](std::size_t i, int n) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(MultiPoly::constant(target_vars, 1));
        while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * (*imgs[i]));
        return cache[static_cast<std::size_t>(n)];
    };
    MultiPoly r(target_vars);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(target_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) term = term * image_pow(i, e[i]);
        }
        r += term;
    }
    return r;
}

int MultiPoly::degree(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw MissingVariable(var);
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int abs_c = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_vars = false;
        for (int x : e)
            if (x != 0) has_vars = true;
        if (abs_c != 1 || !has_vars) out << abs_c.get_str();
        bool printed = (abs_c != 1 || !has_vars);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) out << "*";
            out << vars_[i];
            if (e[i] != 1) out << "^" << e[i];
            printed = true;
        }
    }
    return out.str();
}

bool identity_check(const PointFn& lhs, const PointFn& rhs,
                    const std::map<std::string, int>& degree_bounds,
                    const std::function<bool(const Point&)>& excluded,
                    Point* counterexample) {
    std::vector<std::string> vars;
    std::vector<int> sizes;
    for (const auto& [v, d] : degree_bounds) {
        vars.push_back(v);
        sizes.push_back(d + 1);
    }
    auto enumerate = [&](long shift, const std::function<bool(const Point&)>& visit) {
        std::vector<int> idx(vars.size(), 0);
        while (true) {
            Point p;
            for (std::size_t i = 0; i < vars.size(); ++i) p[vars[i]] = rat(shift + idx[i]);
            if (!visit(p)) return false;
            std::size_t i = 0;
            for (; i < idx.size(); ++i) {
                if (++idx[i] < sizes[i]) break;
                idx[i] = 0;
            }
            if (i == idx.size()) return true;
        }
    };
    constexpr long kMaxShift = 64;
    for (long shift = 1; shift <= kMaxShift; ++shift) {
        bool all_admissible = enumerate(shift, [&](const Point& p) { return !excluded(p); });
        if (!all_admissible) continue;
        bool equal = true;
        enumerate(shift, [&](const Point& p) {
            if (lhs(p) != rhs(p)) {
                equal = false;
                if (counterexample) *counterexample = p;
                return false;
            }
            return true;
        });
        return equal;
    }
    throw InsufficientAdmissiblePoints("no fully admissible grid found within shift range");
}

}  // namespace tgp
