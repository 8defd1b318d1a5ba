#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgf/coeff.hpp"
#include "lgf/rational_qs.hpp"

namespace lgf {

/// GF(p^k) as polynomials over GF(p) modulo a fixed irreducible, elements
/// encoded as integers in [0, p^k) via base-p digits (coefficient of x^j is
/// digit j). The irreducible is the lexicographically smallest monic one of
/// degree k, so tables are reproducible across runs.
class ResidueField {
public:
    ResidueField(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    long q() const { return q_; }
    const std::vector<int>& modulus() const { return mod_; }

    int add(int x, int y) const;
    int neg(int x) const;
    int sub(int x, int y) const { return add(x, neg(y)); }
    int mul(int x, int y) const { return mul_[x * q_ + y]; }
    int inv(int x) const;
    int pow(int x, long e) const;
    /// +1 for nonzero squares, -1 for non-squares; x must be nonzero.
    int legendre(int x) const;
    /// trace down to GF(p), returned as an integer in [0, p).
    int trace(int x) const;
    /// the fixed non-square: smallest element index with legendre = -1.
    int nonsquare() const { return nonsquare_; }

private:
    int p_, k_;
    long q_;
    std::vector<int> mod_;   // monic irreducible, mod_[j] = coeff of x^j, size k+1
    std::vector<int> mul_;   // q x q multiplication table
    std::vector<int> inv_;
    std::vector<int> leg_;
    std::vector<int> tr_;
    int nonsquare_;
};

/// Element of F^x/(F^x)^2 for F = F_q((t)): valuation parity and unit class.
struct SquareClass {
    int vpar = 0;  // 0 or 1
    int upar = 0;  // 0 = square unit part, 1 = non-square unit part

    bool is_one() const { return vpar == 0 && upar == 0; }
    friend SquareClass operator*(SquareClass a, SquareClass b) {
        return {a.vpar ^ b.vpar, a.upar ^ b.upar};
    }
    friend bool operator==(SquareClass a, SquareClass b) {
        return a.vpar == b.vpar && a.upar == b.upar;
    }
    friend bool operator!=(SquareClass a, SquareClass b) { return !(a == b); }

    std::string label() const;                       // "1", "u", "pi", "upi"
    static std::optional<SquareClass> from_label(const std::string& s);
};

inline constexpr SquareClass SQ1{0, 0};
inline constexpr SquareClass SQU{0, 1};
inline constexpr SquareClass SQPI{1, 0};
inline constexpr SquareClass SQUPI{1, 1};

struct QuadExtInfo {
    SquareClass d;
    bool ramified = false;
    int f = 1;     // residue degree
    long qprime;   // q^f
};

class LocalFieldCtx {
public:
    LocalFieldCtx(int p, int k);
    /// q must be an odd prime power; factors it as p^k.
    static LocalFieldCtx from_q(long q);

    long q() const { return res_.q(); }
    const ResidueField& res() const { return res_; }

    /// Legendre(-1) over the residue field: +1 iff q = 1 mod 4.
    int leg_minus_one() const { return res_.legendre(res_.neg(1)); }

    /// square class of a residue-field unit (given by element index)
    SquareClass class_of_unit(int x) const;
    /// square class of -1
    SquareClass class_minus_one() const {
        return leg_minus_one() == 1 ? SQ1 : SQU;
    }
    SquareClass class_of_int(long n) const;  // class of the constant n (unit in O)

    /// canonical unit representative of a class with vpar = 0 (1 or the fixed
    /// non-square), as a residue-field element index
    int unit_rep(SquareClass c) const;

    int hilbert(SquareClass a, SquareClass b) const;
    /// Brute-force solvability of z^2 = a x^2 + b y^2 over O/t^N with a
    /// primitive (x, y, z); +1 if solvable. Depth-first over t-digits with
    /// early acceptance once a solution is liftable by Hensel's lemma.
    int hilbert_oracle(SquareClass a, SquareClass b, int N = 6) const;

    QuadExtInfo classify_quad_ext(SquareClass d) const;

    /// zeta of F itself (f = 1) or of F(sqrt d)
    RationalQS zeta_local() const { return RationalQS::zeta(q()); }
    RationalQS zeta_local(const QuadExtInfo& ext) const {
        return RationalQS::zeta(q(), ext.f);
    }

    std::string json() const;

private:
    ResidueField res_;
};

/// Character of F^x (or of E^x for a quadratic extension E): a quadratic part
/// given by a square class d (d = 1 means trivial) times an unramified twist
/// sending the uniformizer to z. Formal |.|^{s0} twists are folded into z as
/// q^{-s0} (a Coeff, so half-integer s0 is exact).
struct MultChar {
    SquareClass d = SQ1;
    Coeff z = Coeff(1);
    /// residue degree of the target field: 1 for F^x, f(E) for E^x
    int fdeg = 1;

    bool quad_trivial() const { return d.is_one(); }
    bool unramified() const { return d.vpar == 0; }
    /// conductor exponent: 0 for unramified quadratic part, 1 otherwise
    int conductor() const { return unramified() ? 0 : 1; }

    MultChar inverse() const { return {d, z.inv(), fdeg}; }
    MultChar times(const MultChar& other) const;

    /// value at the uniformizer (quadratic part contributes (d, pi)_F)
    Coeff at_uniformizer(const LocalFieldCtx& ctx) const;
    /// value at an element given by (valuation, square class); the z twist
    /// contributes z^valuation.
    Coeff eval(const LocalFieldCtx& ctx, long val, SquareClass unit) const;
    /// value at -1
    Coeff at_minus_one(const LocalFieldCtx& ctx) const;

    friend bool operator==(const MultChar& x, const MultChar& y) {
        return x.d == y.d && x.z == y.z && x.fdeg == y.fdeg;
    }
    friend bool operator!=(const MultChar& x, const MultChar& y) {
        return !(x == y);
    }
};

inline MultChar trivial_char() { return MultChar{}; }
inline MultChar quad_char(SquareClass d) { return MultChar{d, Coeff(1), 1}; }
/// |.|^{h/2} as a character twist: z = q^{-h/2}
MultChar abs_power_char(long q, long h);

/// Additive character of F: psi(x) = zeta_p^{Tr(seed * digit_{-n-1}(x))} where
/// n is the level. Level 0 is the standard unramified character (trivial on O,
/// nontrivial on t^{-1} O). Rescaling by a of valuation v raises the level by
/// v and multiplies the seed by the residue of the unit part of a.
struct AddChar {
    int level = 0;
    int seed = 1;  // residue-field element index, nonzero

    AddChar rescale(const LocalFieldCtx& ctx, long val, int unit_res) const {
        return {level + static_cast<int>(val), ctx.res().mul(seed, unit_res)};
    }
    AddChar inverse(const LocalFieldCtx& ctx) const {
        return {level, ctx.res().neg(seed)};
    }
    /// numeric value zeta_p^{Tr(seed * digit)} for one digit of the argument
    std::complex<double> digit_value(const ResidueField& rf, int digit) const;

    friend bool operator==(const AddChar& x, const AddChar& y) {
        return x.level == y.level && x.seed == y.seed;
    }
    friend bool operator!=(const AddChar& x, const AddChar& y) {
        return !(x == y);
    }
};

}  // namespace lgf
