#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>

namespace lgf {

using Rat = boost::multiprecision::cpp_rational;

/// Element of Q(i, sqrt(q)) written as a + b*i + c*sqrt(q) + d*i*sqrt(q).
///
/// The residue cardinality q is a context parameter: values carry it along so
/// that sqrt(q)^2 can be reduced, and combining values from different q
/// contexts throws. A value with q() == 0 is "context-free" (it lives in Q(i),
/// so its sqrt(q) components must vanish) and is compatible with any context.
class Coeff {
public:
    Coeff() : q_(0) {}
    Coeff(long n) : q_(0), a_(n) {}
    Coeff(const Rat& r) : q_(0), a_(r) {}

    static Coeff make(long q, Rat a, Rat b = 0, Rat c = 0, Rat d = 0);
    static Coeff i_unit() { return make(0, 0, 1); }
    static Coeff sqrt_q(long q) { return make(q, 0, 0, 1); }
    /// q^{h/2} for h in Z (h may be negative).
    static Coeff q_pow_half(long q, long h);

    long q() const { return q_; }
    const Rat& ra() const { return a_; }
    const Rat& rb() const { return b_; }
    const Rat& rc() const { return c_; }
    const Rat& rd() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_one() const { return a_ == 1 && is_rational(); }

    /// Galois conjugations: i -> -i resp. sqrt(q) -> -sqrt(q).
    Coeff conj_i() const;
    Coeff conj_sqrt() const;

    Coeff inv() const;

    friend Coeff operator+(const Coeff& x, const Coeff& y);
    friend Coeff operator-(const Coeff& x, const Coeff& y);
    friend Coeff operator*(const Coeff& x, const Coeff& y);
    friend Coeff operator/(const Coeff& x, const Coeff& y);
    Coeff operator-() const;
    Coeff& operator+=(const Coeff& y) { return *this = *this + y; }
    Coeff& operator-=(const Coeff& y) { return *this = *this - y; }
    Coeff& operator*=(const Coeff& y) { return *this = *this * y; }
    Coeff& operator/=(const Coeff& y) { return *this = *this / y; }

    friend bool operator==(const Coeff& x, const Coeff& y);
    friend bool operator!=(const Coeff& x, const Coeff& y) { return !(x == y); }

    Coeff pow(long k) const;

    std::complex<double> to_complex() const;

    std::string str() const;    // plain text, sqrt(q) spelled "sqrt(q)"
    std::string latex() const;

private:
    long q_;  // 0 = context-free
    Rat a_, b_, c_, d_;

    static long merge_q(long qx, long qy);
};

}  // namespace lgf
