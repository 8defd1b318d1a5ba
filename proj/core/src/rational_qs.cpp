#include "lgf/rational_qs.hpp"

#include <cmath>
#include <sstream>

namespace lgf {

// ---------------------------------------------------------------------------
// Coeff

long Coeff::merge_q(long qx, long qy) {
    if (qx == qy) return qx;
    if (qx == 0) return qy;
    if (qy == 0) return qx;
    throw std::invalid_argument("Coeff: mixing values from different q contexts");
}

Coeff Coeff::make(long q, Rat a, Rat b, Rat c, Rat d) {
    Coeff r;
    if (q == 0 && (c != 0 || d != 0))
        throw std::invalid_argument("Coeff: sqrt(q) component without a q context");
    r.q_ = q;
    r.a_ = std::move(a);
    r.b_ = std::move(b);
    r.c_ = std::move(c);
    r.d_ = std::move(d);
    return r;
}

Coeff Coeff::q_pow_half(long q, long h) {
    if (q <= 0) throw std::invalid_argument("Coeff::q_pow_half: q must be positive");
    // q^{h/2} = q^{floor(h/2)} * (sqrt(q) if h odd)
    long w = (h >= 0) ? h / 2 : -((-h + 1) / 2);
    bool odd = (h % 2) != 0;
    Rat base;
    if (w >= 0) {
        base = 1;
        for (long j = 0; j < w; ++j) base *= q;
    } else {
        base = 1;
        for (long j = 0; j < -w; ++j) base *= q;
        base = Rat(1) / base;
    }
    if (!odd) return make(q, base);
    return make(q, 0, 0, base);
}

Coeff Coeff::conj_i() const {
    Coeff r = *this;
    r.b_ = -r.b_;
    r.d_ = -r.d_;
    return r;
}

Coeff Coeff::conj_sqrt() const {
    Coeff r = *this;
    r.c_ = -r.c_;
    r.d_ = -r.d_;
    return r;
}

Coeff operator+(const Coeff& x, const Coeff& y) {
    Coeff r;
    r.q_ = Coeff::merge_q(x.q_, y.q_);
    r.a_ = x.a_ + y.a_;
    r.b_ = x.b_ + y.b_;
    r.c_ = x.c_ + y.c_;
    r.d_ = x.d_ + y.d_;
    return r;
}

Coeff operator-(const Coeff& x, const Coeff& y) { return x + (-y); }

Coeff Coeff::operator-() const {
    Coeff r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    r.c_ = -r.c_;
    r.d_ = -r.d_;
    return r;
}

Coeff operator*(const Coeff& x, const Coeff& y) {
    Coeff r;
    r.q_ = Coeff::merge_q(x.q_, y.q_);
    Rat q(r.q_);
    // (a1 + b1 i + c1 r + d1 ir)(a2 + b2 i + c2 r + d2 ir), r^2 = q, i^2 = -1
    r.a_ = x.a_ * y.a_ - x.b_ * y.b_ + q * (x.c_ * y.c_ - x.d_ * y.d_);
    r.b_ = x.a_ * y.b_ + x.b_ * y.a_ + q * (x.c_ * y.d_ + x.d_ * y.c_);
    r.c_ = x.a_ * y.c_ + x.c_ * y.a_ - (x.b_ * y.d_ + x.d_ * y.b_);
    r.d_ = x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_;
    return r;
}

Coeff Coeff::inv() const {
    if (is_zero()) throw std::domain_error("Coeff: division by zero");
    // z^{-1} = (product of the three nontrivial Galois conjugates) / Norm(z),
    // Norm(z) = z * that product, a nonzero rational.
    Coeff p = conj_i() * conj_sqrt() * conj_i().conj_sqrt();
    Coeff n = *this * p;
    if (!n.is_rational() || n.a_ == 0)
        throw std::logic_error("Coeff: norm computation failed");
    Rat ninv = Rat(1) / n.a_;
    return Coeff(ninv) * p;
}

Coeff operator/(const Coeff& x, const Coeff& y) { return x * y.inv(); }

bool operator==(const Coeff& x, const Coeff& y) {
    if (x.q_ != y.q_ && x.q_ != 0 && y.q_ != 0) return false;
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

Coeff Coeff::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    Coeff r = Coeff::make(q_, 1);
    Coeff b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

std::complex<double> Coeff::to_complex() const {
    double sq = (q_ > 0) ? std::sqrt(static_cast<double>(q_)) : 0.0;
    auto f = [](const Rat& r) {
        return r.convert_to<double>();
    };
    return {f(a_) + sq * f(c_), f(b_) + sq * f(d_)};
}

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Renders one component term, e.g. "3/2*i" or "-sqrt(q)".
void append_term(std::string& out, const Rat& r, const std::string& sym) {
    if (r == 0) return;
    std::string s;
    Rat ar = r < 0 ? Rat(-r) : r;
    if (sym.empty()) {
        s = rat_str(ar);
    } else if (ar == 1) {
        s = sym;
    } else {
        s = rat_str(ar) + "*" + sym;
    }
    if (out.empty())
        out = (r < 0 ? "-" : "") + s;
    else
        out += (r < 0 ? " - " : " + ") + s;
}

}  // namespace

std::string Coeff::str() const {
    std::string out;
    append_term(out, a_, "");
    append_term(out, b_, "i");
    append_term(out, c_, "sqrt(q)");
    append_term(out, d_, "i*sqrt(q)");
    if (out.empty()) out = "0";
    return out;
}

std::string Coeff::latex() const {
    std::string out;
    append_term(out, a_, "");
    append_term(out, b_, "i");
    append_term(out, c_, "\\sqrt{q}");
    append_term(out, d_, "i\\sqrt{q}");
    if (out.empty()) out = "0";
    return out;
}

// ---------------------------------------------------------------------------
// polynomial helpers (dense vectors, index = exponent)

namespace {

using Poly = std::vector<Coeff>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

long deg(const Poly& p) { return static_cast<long>(p.size()) - 1; }

Poly padd(const Poly& x, const Poly& y) {
    Poly r(std::max(x.size(), y.size()));
    for (size_t j = 0; j < r.size(); ++j) {
        Coeff c;
        if (j < x.size()) c += x[j];
        if (j < y.size()) c += y[j];
        r[j] = c;
    }
    trim(r);
    return r;
}

Poly pneg(const Poly& x) {
    Poly r = x;
    for (auto& c : r) c = -c;
    return r;
}

Poly pmul(const Poly& x, const Poly& y) {
    if (x.empty() || y.empty()) return {};
    Poly r(x.size() + y.size() - 1);
    for (size_t jx = 0; jx < x.size(); ++jx) {
        if (x[jx].is_zero()) continue;
        for (size_t jy = 0; jy < y.size(); ++jy)
            r[jx + jy] += x[jx] * y[jy];
    }
    trim(r);
    return r;
}

Poly pscale(const Poly& x, const Coeff& c) {
    Poly r = x;
    for (auto& e : r) e = e * c;
    trim(r);
    return r;
}

// remainder of x mod y (y nonzero)
Poly pmod(Poly x, const Poly& y) {
    Coeff lead_inv = y.back().inv();
    while (deg(x) >= deg(y)) {
        Coeff f = x.back() * lead_inv;
        long sh = deg(x) - deg(y);
        for (size_t j = 0; j < y.size(); ++j)
            x[j + sh] -= f * y[j];
        trim(x);
        if (x.empty()) break;
    }
    return x;
}

Poly pdiv_exact(Poly x, const Poly& y) {
    Poly qout(x.empty() ? 0 : std::max<long>(0, deg(x) - deg(y) + 1));
    Coeff lead_inv = y.back().inv();
    while (deg(x) >= deg(y)) {
        Coeff f = x.back() * lead_inv;
        long sh = deg(x) - deg(y);
        qout[sh] = f;
        for (size_t j = 0; j < y.size(); ++j)
            x[j + sh] -= f * y[j];
        trim(x);
        if (x.empty()) break;
    }
    if (!x.empty()) throw std::logic_error("pdiv_exact: not divisible");
    trim(qout);
    return qout;
}

Poly pgcd(Poly x, Poly y) {
    while (!y.empty()) {
        Poly r = pmod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.empty()) x = pscale(x, x.back().inv());  // monic
    return x;
}

long low_exp(const Poly& p) {
    for (size_t j = 0; j < p.size(); ++j)
        if (!p[j].is_zero()) return static_cast<long>(j);
    return 0;
}

Poly shift_up(const Poly& p, long k) {
    if (p.empty() || k == 0) return p;
    Poly r(p.size() + k);
    for (size_t j = 0; j < p.size(); ++j) r[j + k] = p[j];
    return r;
}

Poly shift_down(const Poly& p, long k) {
    Poly r(p.begin() + k, p.end());
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// RationalQS

RationalQS::RationalQS(long q, std::vector<Coeff> num, std::vector<Coeff> den)
    : q_(q), num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void RationalQS::canonicalize() {
    trim(num_);
    trim(den_);
    if (den_.empty()) throw std::domain_error("RationalQS: zero denominator");
    if (num_.empty()) {
        den_ = {Coeff::make(q_, 1)};
        return;
    }
    // strip common power of X
    long k = std::min(low_exp(num_), low_exp(den_));
    if (k > 0) {
        num_ = shift_down(num_, k);
        den_ = shift_down(den_, k);
    }
    Poly g = pgcd(num_, den_);
    if (deg(g) > 0 || low_exp(g) > 0) {
        num_ = pdiv_exact(num_, g);
        den_ = pdiv_exact(den_, g);
    }
    Coeff lead_inv = den_.back().inv();
    num_ = pscale(num_, lead_inv);
    den_ = pscale(den_, lead_inv);
    den_.back() = Coeff::make(q_, 1);
}

RationalQS RationalQS::constant(const Coeff& c) {
    return RationalQS(c.q(), {c}, {Coeff::make(c.q(), 1)});
}

RationalQS RationalQS::monomial(const Coeff& c, long e) {
    if (e >= 0) {
        Poly n(e + 1);
        n[e] = c;
        return RationalQS(c.q(), std::move(n), {Coeff::make(c.q(), 1)});
    }
    Poly d(-e + 1);
    d[-e] = Coeff::make(c.q(), 1);
    return RationalQS(c.q(), {c}, std::move(d));
}

RationalQS RationalQS::zeta(long q, int f) {
    Poly d(f + 1);
    d[0] = Coeff::make(q, 1);
    d[f] = Coeff::make(q, -1);
    return RationalQS(q, {Coeff::make(q, 1)}, std::move(d));
}

RationalQS RationalQS::from_laurent(long q, const std::map<long, Coeff>& num,
                                    const std::map<long, Coeff>& den) {
    long lo = 0;
    for (auto& [e, c] : num) lo = std::min(lo, e);
    for (auto& [e, c] : den) lo = std::min(lo, e);
    Poly n, d;
    for (auto& [e, c] : num) {
        long j = e - lo;
        if (static_cast<long>(n.size()) <= j) n.resize(j + 1);
        n[j] += c;
    }
    for (auto& [e, c] : den) {
        long j = e - lo;
        if (static_cast<long>(d.size()) <= j) d.resize(j + 1);
        d[j] += c;
    }
    return RationalQS(q, std::move(n), std::move(d));
}

bool RationalQS::is_one() const {
    return num_.size() == 1 && den_.size() == 1 && num_[0].is_one();
}

bool RationalQS::is_monomial(Coeff* coef, long* exp) const {
    if (is_zero()) return false;
    size_t nnz = 0, dnz = 0;
    long ne = 0, de = 0;
    for (size_t j = 0; j < num_.size(); ++j)
        if (!num_[j].is_zero()) { ++nnz; ne = static_cast<long>(j); }
    for (size_t j = 0; j < den_.size(); ++j)
        if (!den_[j].is_zero()) { ++dnz; de = static_cast<long>(j); }
    if (nnz != 1 || dnz != 1) return false;
    if (coef) *coef = num_[ne] / den_[de];
    if (exp) *exp = ne - de;
    return true;
}

static long merge_ctx(const RationalQS& f, const RationalQS& g) {
    long qf = f.q(), qg = g.q();
    if (qf == qg) return qf;
    if (qf == 0) return qg;
    if (qg == 0) return qf;
    throw std::invalid_argument("RationalQS: mixing values from different q contexts");
}

RationalQS operator+(const RationalQS& f, const RationalQS& g) {
    long q = merge_ctx(f, g);
    return RationalQS(q, padd(pmul(f.num_, g.den_), pmul(g.num_, f.den_)),
                      pmul(f.den_, g.den_));
}

RationalQS operator-(const RationalQS& f, const RationalQS& g) {
    long q = merge_ctx(f, g);
    return RationalQS(q, padd(pmul(f.num_, g.den_), pneg(pmul(g.num_, f.den_))),
                      pmul(f.den_, g.den_));
}

RationalQS operator*(const RationalQS& f, const RationalQS& g) {
    long q = merge_ctx(f, g);
    return RationalQS(q, pmul(f.num_, g.num_), pmul(f.den_, g.den_));
}

RationalQS operator/(const RationalQS& f, const RationalQS& g) {
    long q = merge_ctx(f, g);
    if (g.is_zero()) throw std::domain_error("RationalQS: division by the zero function");
    return RationalQS(q, pmul(f.num_, g.den_), pmul(f.den_, g.num_));
}

RationalQS RationalQS::operator-() const {
    RationalQS r = *this;
    r.num_ = pneg(r.num_);
    return r;
}

bool operator==(const RationalQS& f, const RationalQS& g) {
    if (f.q_ != g.q_ && f.q_ != 0 && g.q_ != 0) return false;
    if (f.num_.size() != g.num_.size() || f.den_.size() != g.den_.size())
        return false;
    for (size_t j = 0; j < f.num_.size(); ++j)
        if (f.num_[j] != g.num_[j]) return false;
    for (size_t j = 0; j < f.den_.size(); ++j)
        if (f.den_[j] != g.den_[j]) return false;
    return true;
}

RationalQS RationalQS::inv() const {
    if (is_zero()) throw std::domain_error("RationalQS: inverse of zero");
    return RationalQS(q_, den_, num_);
}

RationalQS RationalQS::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    RationalQS r = RationalQS::one(q_);
    RationalQS b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

RationalQS RationalQS::shift_half(long h) const {
    if (q_ == 0 && h != 0 && (num_.size() > 1 || den_.size() > 1))
        throw std::invalid_argument("RationalQS::shift_half needs a q context");
    // X^k picks up q^{-hk/2}
    RationalQS r = *this;
    for (size_t j = 0; j < r.num_.size(); ++j)
        if (!r.num_[j].is_zero())
            r.num_[j] = r.num_[j] * Coeff::q_pow_half(q_, -h * static_cast<long>(j));
    for (size_t j = 0; j < r.den_.size(); ++j)
        if (!r.den_[j].is_zero())
            r.den_[j] = r.den_[j] * Coeff::q_pow_half(q_, -h * static_cast<long>(j));
    r.canonicalize();
    return r;
}

RationalQS RationalQS::reflect() const {
    // X -> q^{-1} X^{-1}: coefficient at X^k maps to coeff * q^{-k} at X^{-k};
    // clear denominators by X^{max(deg num, deg den)} on both sides.
    long dn = deg(num_), dd = deg(den_);
    long top = std::max(dn, dd);
    Poly n(top + 1), d(top + 1);
    for (long j = 0; j <= dn; ++j)
        if (!num_[j].is_zero())
            n[top - j] = num_[j] * Coeff::q_pow_half(q_, -2 * j);
    for (long j = 0; j <= dd; ++j)
        if (!den_[j].is_zero())
            d[top - j] = den_[j] * Coeff::q_pow_half(q_, -2 * j);
    return RationalQS(q_, std::move(n), std::move(d));
}

RationalQS RationalQS::subst_neg_s() const {
    long dn = deg(num_), dd = deg(den_);
    long top = std::max(dn, dd);
    Poly n(top + 1), d(top + 1);
    for (long j = 0; j <= dn; ++j) n[top - j] = num_[j];
    for (long j = 0; j <= dd; ++j) d[top - j] = den_[j];
    return RationalQS(q_, std::move(n), std::move(d));
}

std::complex<double> RationalQS::eval(std::complex<double> s) const {
    if (q_ == 0 && (num_.size() > 1 || den_.size() > 1))
        throw std::invalid_argument("RationalQS::eval needs a q context");
    std::complex<double> X =
        q_ > 0 ? std::exp(-s * std::log(static_cast<double>(q_)))
               : std::complex<double>(0.0, 0.0);
    auto horner = [&](const Poly& p) {
        std::complex<double> acc(0.0, 0.0);
        for (size_t j = p.size(); j-- > 0;)
            acc = acc * X + p[j].to_complex();
        return acc;
    };
    std::complex<double> nv = is_zero() ? 0.0 : horner(num_);
    std::complex<double> dv = horner(den_);
    double scale = std::max(1.0, std::abs(X));
    if (std::abs(dv) < 1e-12 * std::pow(scale, static_cast<double>(den_.size())))
        throw pole_error("RationalQS::eval: evaluation at a pole");
    return nv / dv;
}

namespace {

std::string poly_str(const Poly& p, bool latex) {
    if (p.empty()) return "0";
    std::string out;
    for (size_t j = 0; j < p.size(); ++j) {
        if (p[j].is_zero()) continue;
        std::string cs = latex ? p[j].latex() : p[j].str();
        bool needs_paren = cs.find(' ') != std::string::npos;
        std::string term;
        if (j == 0) {
            term = needs_paren ? "(" + cs + ")" : cs;
        } else {
            std::string xp;
            if (latex)
                xp = (j == 1) ? "T" : "T^{" + std::to_string(j) + "}";
            else
                xp = (j == 1) ? "T" : "T^" + std::to_string(j);
            if (p[j].is_one())
                term = xp;
            else if (needs_paren)
                term = "(" + cs + ")*" + xp;
            else if (cs == "-1")
                term = "-" + xp;
            else
                term = cs + "*" + xp;
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace

std::string RationalQS::str() const {
    if (den_.size() == 1 && den_[0].is_one()) return poly_str(num_, false);
    return "(" + poly_str(num_, false) + ") / (" + poly_str(den_, false) + ")";
}

std::string RationalQS::latex() const {
    if (den_.size() == 1 && den_[0].is_one()) return poly_str(num_, true);
    return "\\frac{" + poly_str(num_, true) + "}{" + poly_str(den_, true) + "}";
}

namespace {

void poly_json(std::ostringstream& os, const Poly& p) {
    os << "[";
    for (size_t j = 0; j < p.size(); ++j) {
        if (j) os << ",";
        os << "[\"" << rat_str(p[j].ra()) << "\",\"" << rat_str(p[j].rb())
           << "\",\"" << rat_str(p[j].rc()) << "\",\"" << rat_str(p[j].rd())
           << "\"]";
    }
    os << "]";
}

}  // namespace

std::string RationalQS::json() const {
    std::ostringstream os;
    os << "{\"q\":" << q_ << ",\"num\":";
    poly_json(os, num_);
    os << ",\"den\":";
    poly_json(os, den_);
    os << "}";
    return os.str();
}

}  // namespace lgf
