#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cyclograd {

using Rat = mpq_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Gaussian rational: re + im*sqrt(-1), both arbitrary-precision rationals.
// All arithmetic is exact; division by a nonzero value is exact via the conjugate.
struct Scalar {
    Rat re, im;

    Scalar() : re(0), im(0) {}
    Scalar(int v) : re(v), im(0) {}
    Scalar(long v) : re(v), im(0) {}
    Scalar(const Rat& r) : re(r), im(0) {}
    Scalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar unit_imag() { return Scalar(Rat(0), Rat(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    Scalar conj() const { return Scalar(re, Rat(-im)); }

    // |re|^2 + |im|^2, exact.
    Rat norm_sq() const { return Rat(re * re + im * im); }

    Scalar operator-() const { return Scalar(Rat(-re), Rat(-im)); }

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rat r(re * o.re - im * o.im);
        Rat i(re * o.im + im * o.re);
        re = r;
        im = i;
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        Rat n = o.norm_sq();
        if (sgn(n) == 0) throw std::invalid_argument("division by zero scalar");
        Rat r((re * o.re + im * o.im) / n);
        Rat i((im * o.re - re * o.im) / n);
        re = r;
        im = i;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

// |c| when c is real or purely imaginary (then it is an exact rational);
// otherwise |re|+|im|, an upper bound.  *exact reports which case applied.
inline Rat abs_or_upper(const Scalar& c, bool* exact = nullptr) {
    Rat ar = abs(c.re), ai = abs(c.im);
    bool ok = sgn(c.re) == 0 || sgn(c.im) == 0;
    if (exact) *exact = ok;
    return Rat(ar + ai);
}

std::string scalar_str(const Scalar& c);

} // namespace cyclograd
