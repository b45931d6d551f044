#include "apc/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace apc {

bool MultiPoly::GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
    unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
    if (da != db) return da < db;
    return a < b;
}

MultiPoly::MultiPoly(const Rat& c) {
    if (c != 0) terms_[{}] = c;
}

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_[{1u}] = Rat(1);
    return p;
}

MultiPoly raw_multipoly(std::vector<std::string> vars, MultiPoly::TermMap terms) {
    MultiPoly p;
    p.vars_ = std::move(vars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exponents(vars_.size(), 0u);
}

Rat MultiPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::invalid_argument("MultiPoly::constant_value: not constant");
    return terms_.begin()->second;
}

long MultiPoly::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long t = std::accumulate(e.begin(), e.end(), 0l);
        d = std::max(d, t);
    }
    return d;
}

void MultiPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
    // drop variables that no term uses
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) kept.push_back(vars_[i]);
    TermMap remapped;
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        remapped[std::move(ne)] = c;
    }
    vars_ = std::move(kept);
    terms_ = std::move(remapped);
}

std::vector<std::string> MultiPoly::merge_vars(const std::vector<std::string>& a,
                                               const std::vector<std::string>& b) {
    std::vector<std::string> m;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
    return m;
}

MultiPoly MultiPoly::aligned_to(const std::vector<std::string>& new_vars) const {
    if (new_vars == vars_) return *this;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(new_vars.begin(), new_vars.end(), vars_[i]);
        if (it == new_vars.end() || *it != vars_[i])
            throw std::invalid_argument("MultiPoly: variable alignment lost " + vars_[i]);
        pos[i] = static_cast<std::size_t>(it - new_vars.begin());
    }
    MultiPoly r;
    r.vars_ = new_vars;
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_vars.size(), 0u);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        r.terms_[std::move(ne)] = c;
    }
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    std::vector<std::string> mv = merge_vars(vars_, o.vars_);
    MultiPoly a = aligned_to(mv), b = o.aligned_to(mv);
    for (const auto& [e, c] : b.terms_) {
        auto [it, inserted] = a.terms_.try_emplace(e, c);
        if (!inserted) it->second += c;
    }
    a.normalize();
    return a;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    std::vector<std::string> mv = merge_vars(vars_, o.vars_);
    MultiPoly a = aligned_to(mv), b = o.aligned_to(mv);
    MultiPoly r;
    r.vars_ = mv;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(mv.size());
            for (std::size_t i = 0; i < mv.size(); ++i) e[i] = ea[i] + eb[i];
            Rat prod = ca * cb;
            auto [it, inserted] = r.terms_.try_emplace(std::move(e), prod);
            if (!inserted) it->second += prod;
        }
    r.normalize();
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& s) const {
    if (s == 0) return MultiPoly();
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
    MultiPoly r(Rat(1)), base = *this;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return *this;
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());

    // group by the substituted variable's exponent, then Horner
    std::map<unsigned, MultiPoly> layers;
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        unsigned k = rest[idx];
        rest[idx] = 0;
        MultiPoly& layer = layers[k];
        MultiPoly term;
        term.vars_ = vars_;
        term.terms_[std::move(rest)] = c;
        term.normalize();
        layer += term;
    }
    MultiPoly acc;
    unsigned prev = 0;
    bool first = true;
    for (auto lit = layers.rbegin(); lit != layers.rend(); ++lit) {
        if (first) {
            acc = lit->second;
            prev = lit->first;
            first = false;
            continue;
        }
        acc = acc * value.pow(prev - lit->first) + lit->second;
        prev = lit->first;
    }
    if (first) return MultiPoly();
    if (prev > 0) acc = acc * value.pow(prev);
    return acc;
}

Rat MultiPoly::eval(const std::map<std::string, Rat>& point) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (!e[i]) continue;
            auto it = point.find(vars_[i]);
            if (it == point.end())
                throw std::invalid_argument("MultiPoly::eval: missing value for " + vars_[i]);
            term *= pow_rat(it->second, e[i]);
        }
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return MultiPoly();
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    MultiPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (!e[idx]) continue;
        Exponents ne = e;
        ne[idx] -= 1;
        Rat coeff = c * Rat(static_cast<long>(e[idx]));
        auto [jt, inserted] = r.terms_.try_emplace(std::move(ne), coeff);
        if (!inserted) jt->second += coeff;
    }
    r.normalize();
    return r;
}

MultiPoly MultiPoly::reduce_square(const std::string& var, const MultiPoly& rep) const {
    for (const auto& v : rep.vars_)
        if (v == var) throw std::invalid_argument("reduce_square: replacement involves " + var);
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return *this;
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());

    MultiPoly out;
    for (const auto& [e, c] : terms_) {
        unsigned k = e[idx];
        Exponents ne = e;
        ne[idx] = k % 2;
        MultiPoly term;
        term.vars_ = vars_;
        term.terms_[std::move(ne)] = c;
        term.normalize();
        if (k >= 2) term *= rep.pow(k / 2);
        out += term;
    }
    return out;
}

std::vector<MultiPoly> MultiPoly::collect(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return {*this};
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    unsigned top = 0;
    for (const auto& [e, c] : terms_) top = std::max(top, e[idx]);
    std::vector<MultiPoly> out(top + 1);
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        unsigned k = ne[idx];
        ne[idx] = 0;
        MultiPoly term;
        term.vars_ = vars_;
        term.terms_[std::move(ne)] = c;
        term.normalize();
        out[k] += term;
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    // highest grlex term first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        Rat a = abs(c);
        bool all_zero = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
        bool unit = (a == 1) && !all_zero;
        std::string mono;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (!unit) s += a.get_str();
        if (!mono.empty()) {
            if (!unit) s += "*";
            s += mono;
        }
    }
    return s;
}

}  // namespace apc
