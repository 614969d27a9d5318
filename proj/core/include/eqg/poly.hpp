#pragma once

#include <string>
#include <vector>

#include "eqg/rational.hpp"

namespace eqg {

// Polynomial in one variable t over the rationals, dense coefficients.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c) : c_{c} { trim(); } // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(Rat(c)) {}          // NOLINT(google-explicit-constructor)
    static Poly t(unsigned power = 1, const Rat& coeff = 1) {
        Poly p;
        p.c_.assign(power + 1, Rat(0));
        p.c_[power] = coeff;
        p.trim();
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(unsigned k) const { return k < c_.size() ? c_[k] : Rat(0); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
    Poly operator-(const Poly& o) const { Poly r = *this; r -= o; return r; }
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool isZero() const { return c_.empty(); }

    Rat eval(const Rat& t) const;
    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

inline Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

inline Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

inline Poly Poly::operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    Poly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t a = 0; a < c_.size(); ++a) {
        if (c_[a] == 0) continue;
        for (size_t b = 0; b < o.c_.size(); ++b) r.c_[a + b] += c_[a] * o.c_[b];
    }
    r.trim();
    return r;
}

inline Poly Poly::operator-() const {
    Poly r = *this;
    for (Rat& v : r.c_) v = -v;
    return r;
}

inline Rat Poly::eval(const Rat& t) const {
    Rat v = 0;
    for (size_t k = c_.size(); k-- > 0;) v = v * t + c_[k];
    return v;
}

inline std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!s.empty()) s += " + ";
        s += numString(c_[k]);
        if (denString(c_[k]) != "1") s += "/" + denString(c_[k]);
        if (k >= 1) s += "*t";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

} // namespace eqg
