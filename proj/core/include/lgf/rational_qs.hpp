#pragma once

#include <map>
#include <vector>

#include "lgf/coeff.hpp"

namespace lgf {

struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational function in X = q^{-s} with Coeff coefficients.
///
/// Canonical form: numerator and denominator are polynomials in X with no
/// common factor (including no common power of X), and the denominator's
/// top-degree coefficient is 1. Equality is coefficientwise equality of the
/// canonical forms. Half-integer powers of q^{-s} are carried by sqrt(q)
/// coefficients, so X exponents stay integral throughout.
class RationalQS {
public:
    RationalQS() : q_(0), num_{}, den_{Coeff(1)} {}

    static RationalQS constant(const Coeff& c);
    /// c * X^e, e may be negative.
    static RationalQS monomial(const Coeff& c, long e);
    static RationalQS zero(long q) { return constant(Coeff::make(q, 0)); }
    static RationalQS one(long q) { return constant(Coeff::make(q, 1)); }
    /// zeta of a field with residue cardinality q^f: 1/(1 - X^f).
    static RationalQS zeta(long q, int f = 1);
    /// Laurent numerator/denominator given as exponent -> coefficient maps.
    static RationalQS from_laurent(long q, const std::map<long, Coeff>& num,
                                   const std::map<long, Coeff>& den);

    long q() const { return q_; }
    const std::vector<Coeff>& num() const { return num_; }
    const std::vector<Coeff>& den() const { return den_; }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    /// True iff the value is c * X^m (m integral here; half-integer powers of
    /// q^{-s} show up as sqrt(q) factors inside c). Outputs are optional.
    bool is_monomial(Coeff* coef = nullptr, long* exp = nullptr) const;

    friend RationalQS operator+(const RationalQS& f, const RationalQS& g);
    friend RationalQS operator-(const RationalQS& f, const RationalQS& g);
    friend RationalQS operator*(const RationalQS& f, const RationalQS& g);
    friend RationalQS operator/(const RationalQS& f, const RationalQS& g);
    RationalQS operator-() const;
    RationalQS& operator*=(const RationalQS& g) { return *this = *this * g; }
    RationalQS& operator/=(const RationalQS& g) { return *this = *this / g; }
    RationalQS& operator+=(const RationalQS& g) { return *this = *this + g; }
    RationalQS& operator-=(const RationalQS& g) { return *this = *this - g; }

    friend bool operator==(const RationalQS& f, const RationalQS& g);
    friend bool operator!=(const RationalQS& f, const RationalQS& g) {
        return !(f == g);
    }

    RationalQS inv() const;
    RationalQS pow(long k) const;

    /// s -> s + h/2, i.e. X -> q^{-h/2} X.
    RationalQS shift_half(long h) const;
    /// s -> 1 - s, i.e. X -> q^{-1} X^{-1}.
    RationalQS reflect() const;
    /// s -> -s, i.e. X -> X^{-1}.
    RationalQS subst_neg_s() const;

    /// Evaluate at a complex s. Throws pole_error near a pole.
    std::complex<double> eval(std::complex<double> s) const;

    std::string str() const;    // plain, with T standing for q^{-s}
    std::string latex() const;
    std::string json() const;   // {"q":..,"num":[[a,b,c,d],..],"den":[..]}

private:
    long q_;
    std::vector<Coeff> num_, den_;  // dense, index = X exponent

    RationalQS(long q, std::vector<Coeff> num, std::vector<Coeff> den);
    void canonicalize();
};

}  // namespace lgf
