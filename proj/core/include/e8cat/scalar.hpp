#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace e8cat {

using Rat = mpq_class;

/// mpq_class(num, den) does not canonicalize; always build fractions here.
inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Element of Q(v2), stored as a + b*sqrt(2) with exact rational parts.
/// Every coefficient appearing in the catalog lies in this field: the only
/// trigonometric values needed are cos/sin of multiples of pi/4.
struct ExactScalar {
    Rat a;  // rational part
    Rat b;  // coefficient of sqrt(2)

    ExactScalar() : a(0), b(0) {}
    ExactScalar(long v) : a(v), b(0) {}  // NOLINT(google-explicit-constructor)
    ExactScalar(Rat ra) : a(std::move(ra)), b(0) {}  // NOLINT
    ExactScalar(Rat ra, Rat rb) : a(std::move(ra)), b(std::move(rb)) {}

    static ExactScalar sqrt2() { return ExactScalar(Rat(0), Rat(1)); }
    /// 1/sqrt(2) = sqrt(2)/2, i.e. cos(pi/4).
    static ExactScalar inv_sqrt2() { return ExactScalar(rat(0), rat(1, 2)); }

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool is_one() const { return a == 1 && sgn(b) == 0; }
    bool is_rational() const { return sgn(b) == 0; }

    ExactScalar operator-() const { return ExactScalar(-a, -b); }

    ExactScalar& operator+=(const ExactScalar& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    ExactScalar& operator-=(const ExactScalar& o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }
    ExactScalar& operator*=(const ExactScalar& o) {
        Rat na = a * o.a + 2 * (b * o.b);
        b = a * o.b + b * o.a;
        a = std::move(na);
        return *this;
    }

    friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
    friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
    friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
        return ExactScalar(x.a * y.a + 2 * (x.b * y.b), x.a * y.b + x.b * y.a);
    }

    /// Multiplicative inverse; a + b*sqrt(2) = 0 iff a = b = 0 since sqrt(2)
    /// is irrational, so the norm a^2 - 2 b^2 vanishes only at zero.
    ExactScalar inverse() const {
        Rat n = a * a - 2 * (b * b);
        if (sgn(n) == 0) throw std::domain_error("ExactScalar: division by zero");
        return ExactScalar(a / n, -b / n);
    }
    friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) {
        return x * y.inverse();
    }

    bool operator==(const ExactScalar& o) const { return a == o.a && b == o.b; }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }
    /// Total order used only for canonical forms, not for magnitude.
    bool operator<(const ExactScalar& o) const {
        int c = cmp(a, o.a);
        if (c != 0) return c < 0;
        return cmp(b, o.b) < 0;
    }

    /// x -= f * y without temporaries in the common all-rational case.
    void submul(const ExactScalar& f, const ExactScalar& y) {
        a -= f.a * y.a;
        if (sgn(f.b) != 0 && sgn(y.b) != 0) a -= 2 * (f.b * y.b);
        if (sgn(f.a) != 0 && sgn(y.b) != 0) b -= f.a * y.b;
        if (sgn(f.b) != 0 && sgn(y.a) != 0) b -= f.b * y.a;
    }

    /// Rough size of the representation, used to pick simple pivots.
    size_t complexity() const {
        return mpz_sizeinbase(a.get_num_mpz_t(), 2) + mpz_sizeinbase(a.get_den_mpz_t(), 2) +
               mpz_sizeinbase(b.get_num_mpz_t(), 2) + mpz_sizeinbase(b.get_den_mpz_t(), 2);
    }

    std::string str() const {
        if (sgn(b) == 0) return a.get_str();
        std::string s;
        if (sgn(a) != 0) s = a.get_str() + "+";
        s += "(" + b.get_str() + ")r2";
        return s;
    }
};

inline ExactScalar operator*(long x, const ExactScalar& y) { return ExactScalar(x) * y; }

/// Formal complexification of Q(v2); only used by the optional weight-space
/// cross checks, the main pipeline is entirely real.
struct ComplexScalar {
    ExactScalar re, im;

    ComplexScalar() = default;
    ComplexScalar(ExactScalar r) : re(std::move(r)) {}  // NOLINT
    ComplexScalar(ExactScalar r, ExactScalar i) : re(std::move(r)), im(std::move(i)) {}

    static ComplexScalar i() { return ComplexScalar(ExactScalar(0), ExactScalar(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    ComplexScalar conj() const { return ComplexScalar(re, -im); }
    ComplexScalar operator-() const { return ComplexScalar(-re, -im); }

    friend ComplexScalar operator+(const ComplexScalar& x, const ComplexScalar& y) {
        return ComplexScalar(x.re + y.re, x.im + y.im);
    }
    friend ComplexScalar operator-(const ComplexScalar& x, const ComplexScalar& y) {
        return ComplexScalar(x.re - y.re, x.im - y.im);
    }
    friend ComplexScalar operator*(const ComplexScalar& x, const ComplexScalar& y) {
        return ComplexScalar(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
    }
    ComplexScalar inverse() const {
        ExactScalar n = re * re + im * im;
        ExactScalar ni = n.inverse();
        return ComplexScalar(re * ni, -(im * ni));
    }
    friend ComplexScalar operator/(const ComplexScalar& x, const ComplexScalar& y) {
        return x * y.inverse();
    }
    bool operator==(const ComplexScalar& o) const { return re == o.re && im == o.im; }
    bool operator!=(const ComplexScalar& o) const { return !(*this == o); }
};

}  // namespace e8cat
