#include "uqcas/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace uqcas {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.emplace_back(0, BigRat(c));
}

LaurentPoly::LaurentPoly(const BigRat& c) {
    if (c != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::q_power(long e, const BigRat& c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace_back(e, c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

long LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero Laurent polynomial");
    return terms_.front().first;
}

long LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero Laurent polynomial");
    return terms_.back().first;
}

BigRat LaurentPoly::coeff(long e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, long x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return BigRat(0);
}

void LaurentPoly::scale(const BigRat& c, long e) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    for (auto& t : terms_) {
        t.first += e;
        t.second *= c;
    }
}

LaurentPoly LaurentPoly::shifted(long e) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.first += e;
    return p;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

void LaurentPoly::add_term(long e, const BigRat& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, long x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {e, c});
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.cbegin();
    auto b = o.terms_.cbegin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            BigRat c = a->second + b->second;
            if (c != 0) merged.emplace_back(a->first, c);
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    r += b;
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    r -= b;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    if (a.terms_.size() == 1) {
        r = b;
        r.scale(a.terms_[0].second, a.terms_[0].first);
        return r;
    }
    if (b.terms_.size() == 1) {
        r = a;
        r.scale(b.terms_[0].second, b.terms_[0].first);
        return r;
    }
    std::map<long, BigRat> acc;
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) acc[ta.first + tb.first] += ta.second * tb.second;
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.emplace_back(e, c);
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        p.terms_.emplace_back(-it->first, it->second);
    return p;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigRat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << uqcas::to_string(a);
        } else {
            if (a != 1) os << uqcas::to_string(a) << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

// Dense coefficient vector from exponent 0 upward, used for polynomial
// gcd/division after stripping the lowest Laurent exponent.
std::vector<BigRat> dense(const LaurentPoly& p, long base) {
    std::vector<BigRat> v(static_cast<size_t>(p.max_exp() - base) + 1, BigRat(0));
    for (const auto& [e, c] : p.terms()) v[static_cast<size_t>(e - base)] = c;
    return v;
}

void trim(std::vector<BigRat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Remainder of a by b (monic-leading division over Q), in place on a.
void rem_inplace(std::vector<BigRat>& a, const std::vector<BigRat>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        BigRat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
}

LaurentPoly from_dense(const std::vector<BigRat>& v, long base) {
    LaurentPoly p;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) p += LaurentPoly::q_power(base + static_cast<long>(i), v[i]);
    return p;
}

} // namespace

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    if (a.is_zero()) return b.shifted(-b.min_exp());
    if (b.is_zero()) return a.shifted(-a.min_exp());
    std::vector<BigRat> u = dense(a, a.min_exp());
    std::vector<BigRat> v = dense(b, b.min_exp());
    while (!v.empty()) {
        rem_inplace(u, v);
        std::swap(u, v);
    }
    LaurentPoly g = from_dense(u, 0);
    g.scale(BigRat(1) / g.terms_.back().second);
    return g;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    if (a.is_zero()) return LaurentPoly();
    long shift = a.min_exp() - b.min_exp();
    std::vector<BigRat> u = dense(a, a.min_exp());
    std::vector<BigRat> v = dense(b, b.min_exp());
    if (u.size() < v.size()) throw std::logic_error("inexact Laurent division");
    std::vector<BigRat> quo(u.size() - v.size() + 1, BigRat(0));
    while (u.size() >= v.size() && !u.empty()) {
        BigRat f = u.back() / v.back();
        size_t off = u.size() - v.size();
        quo[off] = f;
        for (size_t i = 0; i < v.size(); ++i) u[off + i] -= f * v[i];
        trim(u);
        if (!u.empty() && u.size() < v.size()) throw std::logic_error("inexact Laurent division");
    }
    if (!u.empty()) throw std::logic_error("inexact Laurent division");
    return from_dense(quo, shift);
}

} // namespace uqcas
