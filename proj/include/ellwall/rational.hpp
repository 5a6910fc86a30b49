#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ellwall {

using Int = std::int64_t;

namespace detail {

inline Int checked_cast(__int128 v) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw std::overflow_error("rational arithmetic overflow (int64 range exceeded)");
    return static_cast<Int>(v);
}

inline __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace detail

/// Exact rational number with int64 numerator/denominator.
/// All intermediate products go through __int128; results are reduced and
/// range-checked, which is ample headroom for the lattice ranks (<= 11) and
/// coefficient sizes handled here.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(Int n) : num_(n), den_(1) {}
    Rat(Int n, Int d) { assign(n, d); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    /// Largest integer <= *this.
    Int floor() const {
        Int q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return from128(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from128(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    /// Serialized as "p" or "p/q".
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p" or "p/q".
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(std::stoll(s));
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    void assign(Int n, Int d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        Int g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = n;
        den_ = d;
    }

    static Rat from128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rat r;
        r.num_ = detail::checked_cast(n);
        r.den_ = detail::checked_cast(d);
        return r;
    }

    Int num_;
    Int den_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

/// Gaussian rational: exact complex number with rational real/imaginary parts.
/// Backs the exact central-charge backend.
class GaussianRat {
public:
    GaussianRat() = default;
    GaussianRat(Rat re) : re_(re) {}
    GaussianRat(Int re) : re_(re) {}
    GaussianRat(Rat re, Rat im) : re_(re), im_(im) {}

    const Rat& real() const { return re_; }
    const Rat& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    GaussianRat conj() const { return {re_, -im_}; }

    friend GaussianRat operator+(const GaussianRat& a, const GaussianRat& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRat operator-(const GaussianRat& a, const GaussianRat& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRat operator*(const GaussianRat& a, const GaussianRat& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRat operator/(const GaussianRat& a, const GaussianRat& b) {
        Rat n = b.re_ * b.re_ + b.im_ * b.im_;
        if (n.is_zero()) throw std::domain_error("gaussian rational division by zero");
        GaussianRat p = a * b.conj();
        return {p.re_ / n, p.im_ / n};
    }
    GaussianRat operator-() const { return {-re_, -im_}; }
    GaussianRat& operator+=(const GaussianRat& o) { return *this = *this + o; }
    GaussianRat& operator-=(const GaussianRat& o) { return *this = *this - o; }
    GaussianRat& operator*=(const GaussianRat& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRat& a, const GaussianRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRat& a, const GaussianRat& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRat& z) {
        return os << "(" << z.re_ << ", " << z.im_ << ")";
    }

private:
    Rat re_;
    Rat im_;
};

using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

} // namespace ellwall

namespace Eigen {

template <>
struct NumTraits<ellwall::Rat> : GenericNumTraits<ellwall::Rat> {
    using Real = ellwall::Rat;
    using NonInteger = ellwall::Rat;
    using Nested = ellwall::Rat;
    using Literal = ellwall::Int;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 8,
        MulCost = 8,
    };
    static inline Real epsilon() { return ellwall::Rat(0); }
    static inline Real dummy_precision() { return ellwall::Rat(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen
