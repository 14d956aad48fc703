#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>

namespace triwalk {

namespace detail {
template <class S, class T>
S coeff_cast(const T& v) {
    if constexpr (std::is_convertible_v<T, S>)
        return static_cast<S>(v);
    else
        return v.template convert_to<S>();
}
}  // namespace detail

/// Sparse polynomial in two variables; keys are exponent pairs (d1, d2).
template <class T>
class Poly2 {
  public:
    using Key = std::pair<int, int>;

    Poly2() = default;
    explicit Poly2(const T& constant) {
        if (constant != T(0)) c_[{0, 0}] = constant;
    }
    static Poly2 monomial(int d1, int d2, const T& coeff) {
        Poly2 p;
        if (coeff != T(0)) p.c_[{d1, d2}] = coeff;
        return p;
    }

    const std::map<Key, T>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    T coefficient(int d1, int d2) const {
        auto it = c_.find({d1, d2});
        return it == c_.end() ? T(0) : it->second;
    }
    T constant_term() const { return coefficient(0, 0); }

    int degree() const {
        int d = 0;
        for (const auto& [k, v] : c_) d = std::max(d, k.first + k.second);
        return d;
    }

    Poly2 homogeneous_part(int k) const {
        Poly2 out;
        for (const auto& [key, v] : c_)
            if (key.first + key.second == k) out.c_[key] = v;
        return out;
    }

    Poly2 operator+(const Poly2& o) const {
        Poly2 out = *this;
        for (const auto& [k, v] : o.c_) out.add_term(k, v);
        return out;
    }
    Poly2 operator-(const Poly2& o) const {
        Poly2 out = *this;
        for (const auto& [k, v] : o.c_) out.add_term(k, -v);
        return out;
    }
    Poly2 operator*(const Poly2& o) const {
        Poly2 out;
        for (const auto& [ka, va] : c_)
            for (const auto& [kb, vb] : o.c_)
                out.add_term({ka.first + kb.first, ka.second + kb.second}, va * vb);
        return out;
    }
    Poly2 operator*(const T& s) const {
        Poly2 out;
        if (s == T(0)) return out;
        for (const auto& [k, v] : c_) out.c_[k] = v * s;
        return out;
    }
    Poly2 operator-() const { return *this * T(-1); }
    bool operator==(const Poly2& o) const { return c_ == o.c_; }

    /// d/dx1 or d/dx2 (var = 1 or 2).
    Poly2 derivative(int var) const {
        Poly2 out;
        for (const auto& [k, v] : c_) {
            int e = (var == 1) ? k.first : k.second;
            if (e == 0) continue;
            Key nk = (var == 1) ? Key{k.first - 1, k.second} : Key{k.first, k.second - 1};
            out.add_term(nk, v * T(e));
        }
        return out;
    }

    template <class S>
    S eval(S x1, S x2) const {
        S total(0);
        for (const auto& [k, v] : c_) {
            S term = detail::coeff_cast<S>(v);
            for (int i = 0; i < k.first; ++i) term *= x1;
            for (int i = 0; i < k.second; ++i) term *= x2;
            total += term;
        }
        return total;
    }

    void add_term(Key k, const T& v) {
        auto it = c_.find(k);
        if (it == c_.end()) {
            if (v != T(0)) c_[k] = v;
        } else {
            it->second += v;
            if (it->second == T(0)) c_.erase(it);
        }
    }

    std::string str(const char* v1 = "x1", const char* v2 = "x2") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, v] : c_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << v << ")";
            if (k.first) os << "*" << v1 << "^" << k.first;
            if (k.second) os << "*" << v2 << "^" << k.second;
        }
        return os.str();
    }

  private:
    std::map<Key, T> c_;
};

/// Sparse polynomial in the three variables u1, u2, u3 (u_i = <e_i, theta>),
/// kept in multiset-of-indices form; canonicalization to (u1, u2) happens
/// only on request via u3 = u2 - u1.
template <class T>
class Poly3 {
  public:
    using Key = std::array<int, 3>;

    Poly3() = default;
    explicit Poly3(const T& constant) {
        if (constant != T(0)) c_[{0, 0, 0}] = constant;
    }
    static Poly3 monomial(Key k, const T& coeff) {
        Poly3 p;
        if (coeff != T(0)) p.c_[k] = coeff;
        return p;
    }
    /// u_i^q scaled by coeff (i in {1,2,3}).
    static Poly3 power_of_var(int i, int q, const T& coeff) {
        Key k = {0, 0, 0};
        k[i - 1] = q;
        return monomial(k, coeff);
    }

    const std::map<Key, T>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Poly3 operator+(const Poly3& o) const {
        Poly3 out = *this;
        for (const auto& [k, v] : o.c_) out.add_term(k, v);
        return out;
    }
    Poly3 operator-(const Poly3& o) const {
        Poly3 out = *this;
        for (const auto& [k, v] : o.c_) out.add_term(k, -v);
        return out;
    }
    Poly3 operator*(const Poly3& o) const {
        Poly3 out;
        for (const auto& [ka, va] : c_)
            for (const auto& [kb, vb] : o.c_)
                out.add_term({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, va * vb);
        return out;
    }
    Poly3 operator*(const T& s) const {
        Poly3 out;
        if (s == T(0)) return out;
        for (const auto& [k, v] : c_) out.c_[k] = v * s;
        return out;
    }
    bool operator==(const Poly3& o) const { return c_ == o.c_; }

    void add_term(Key k, const T& v) {
        auto it = c_.find(k);
        if (it == c_.end()) {
            if (v != T(0)) c_[k] = v;
        } else {
            it->second += v;
            if (it->second == T(0)) c_.erase(it);
        }
    }

    /// Substitutes u3 = u2 - u1; unique canonical two-variable form.
    Poly2<T> canonical() const {
        Poly2<T> u1 = Poly2<T>::monomial(1, 0, T(1));
        Poly2<T> u2 = Poly2<T>::monomial(0, 1, T(1));
        Poly2<T> u3 = u2 - u1;
        Poly2<T> out;
        for (const auto& [k, v] : c_) {
            Poly2<T> term(v);
            for (int i = 0; i < k[0]; ++i) term = term * u1;
            for (int i = 0; i < k[1]; ++i) term = term * u2;
            for (int i = 0; i < k[2]; ++i) term = term * u3;
            out = out + term;
        }
        return out;
    }

  private:
    std::map<Key, T> c_;
};

}  // namespace triwalk
