#include "lgf/local_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace lgf {

// ---------------------------------------------------------------------------
// GF(p) polynomial helpers for building the residue field

namespace {

// multiply two GF(p) polynomials (coefficient vectors, low degree first)
std::vector<int> gfp_mul(const std::vector<int>& x, const std::vector<int>& y, int p) {
    if (x.empty() || y.empty()) return {};
    std::vector<int> r(x.size() + y.size() - 1, 0);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j)
            r[i + j] = (r[i + j] + x[i] * y[j]) % p;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<int> gfp_mod(std::vector<int> x, const std::vector<int>& m, int p) {
    // m monic
    while (x.size() >= m.size()) {
        int f = x.back();
        size_t sh = x.size() - m.size();
        for (size_t j = 0; j < m.size(); ++j)
            x[j + sh] = ((x[j + sh] - f * m[j]) % p + p) % p;
        while (!x.empty() && x.back() == 0) x.pop_back();
    }
    return x;
}

std::vector<int> decode(long idx, int p, int k) {
    std::vector<int> r(k, 0);
    for (int j = 0; j < k; ++j) {
        r[j] = static_cast<int>(idx % p);
        idx /= p;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

long encode(const std::vector<int>& poly, int p) {
    long r = 0;
    for (size_t j = poly.size(); j-- > 0;) r = r * p + poly[j];
    return r;
}

bool divides(const std::vector<int>& d, const std::vector<int>& x, int p) {
    return gfp_mod(x, d, p).empty();
}

bool is_irreducible(const std::vector<int>& m, int p) {
    int k = static_cast<int>(m.size()) - 1;
    // trial division by all monic polynomials of degree 1 .. k/2
    for (int dd = 1; 2 * dd <= k; ++dd) {
        long count = 1;
        for (int j = 0; j < dd; ++j) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            std::vector<int> cand = decode(idx, p, dd);
            cand.resize(dd + 1, 0);
            cand[dd] = 1;
            if (divides(cand, m, p)) return false;
        }
    }
    return true;
}

}  // namespace

ResidueField::ResidueField(int p, int k) : p_(p), k_(k) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("ResidueField: p must be an odd prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("ResidueField: p must be prime");
    if (k < 1) throw std::invalid_argument("ResidueField: k must be positive");
    q_ = 1;
    for (int j = 0; j < k; ++j) q_ *= p;

    // lexicographically smallest monic irreducible of degree k (lex in the
    // constant-first digit encoding)
    if (k == 1) {
        mod_ = {0, 1};
    } else {
        long count = q_;
        mod_.clear();
        for (long idx = 0; idx < count; ++idx) {
            std::vector<int> cand = decode(idx, p, k);
            cand.resize(k + 1, 0);
            cand[k] = 1;
            if (cand[0] != 0 && is_irreducible(cand, p)) {
                mod_ = cand;
                break;
            }
        }
        if (mod_.empty()) throw std::logic_error("ResidueField: no irreducible found");
    }

    mul_.assign(q_ * q_, 0);
    for (long x = 0; x < q_; ++x) {
        auto px = decode(x, p, k);
        for (long y = x; y < q_; ++y) {
            auto py = decode(y, p, k);
            long v = encode(gfp_mod(gfp_mul(px, py, p), mod_, p), p);
            mul_[x * q_ + y] = static_cast<int>(v);
            mul_[y * q_ + x] = static_cast<int>(v);
        }
    }

    inv_.assign(q_, 0);
    leg_.assign(q_, 0);
    tr_.assign(q_, 0);
    for (long x = 1; x < q_; ++x) {
        inv_[x] = pow(static_cast<int>(x), q_ - 2);
        leg_[x] = (pow(static_cast<int>(x), (q_ - 1) / 2) == 1) ? 1 : -1;
        // trace: x + x^p + ... + x^{p^{k-1}}
        int acc = 0, xp = static_cast<int>(x);
        for (int j = 0; j < k; ++j) {
            acc = add(acc, xp);
            xp = pow(xp, p);
        }
        tr_[x] = acc;  // lies in the prime field, index in [0, p)
    }
    nonsquare_ = 0;
    for (long x = 2; x < q_; ++x)
        if (leg_[x] == -1) {
            nonsquare_ = static_cast<int>(x);
            break;
        }
}

int ResidueField::add(int x, int y) const {
    // digitwise mod-p addition of the encodings
    int r = 0, pw = 1;
    for (int j = 0; j < k_; ++j) {
        int dx = (x / pw) % p_;
        int dy = (y / pw) % p_;
        r += ((dx + dy) % p_) * pw;
        pw *= p_;
    }
    return r;
}

int ResidueField::neg(int x) const {
    int r = 0, pw = 1;
    for (int j = 0; j < k_; ++j) {
        int dx = (x / pw) % p_;
        r += ((p_ - dx) % p_) * pw;
        pw *= p_;
    }
    return r;
}

int ResidueField::inv(int x) const {
    if (x == 0) throw std::domain_error("ResidueField: inverse of zero");
    return inv_[x];
}

int ResidueField::pow(int x, long e) const {
    if (x == 0) return e == 0 ? 1 : 0;
    e %= (q_ - 1);
    if (e < 0) e += q_ - 1;
    int r = 1, b = x;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

int ResidueField::legendre(int x) const {
    if (x == 0) throw std::domain_error("ResidueField: legendre of zero");
    return leg_[x];
}

int ResidueField::trace(int x) const { return tr_[x]; }

// ---------------------------------------------------------------------------
// SquareClass

std::string SquareClass::label() const {
    if (vpar == 0) return upar == 0 ? "1" : "u";
    return upar == 0 ? "pi" : "upi";
}

std::optional<SquareClass> SquareClass::from_label(const std::string& s) {
    if (s == "1") return SQ1;
    if (s == "u") return SQU;
    if (s == "pi") return SQPI;
    if (s == "upi") return SQUPI;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// LocalFieldCtx

LocalFieldCtx::LocalFieldCtx(int p, int k) : res_(p, k) {}

LocalFieldCtx LocalFieldCtx::from_q(long q) {
    for (int p = 3; p <= q; p += 2) {
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime) continue;
        long pow = p;
        int k = 1;
        while (pow < q) { pow *= p; ++k; }
        if (pow == q) return LocalFieldCtx(p, k);
    }
    throw std::invalid_argument("LocalFieldCtx: q is not an odd prime power");
}

SquareClass LocalFieldCtx::class_of_unit(int x) const {
    return res_.legendre(x) == 1 ? SQ1 : SQU;
}

SquareClass LocalFieldCtx::class_of_int(long n) const {
    long p = res_.p();
    long r = ((n % p) + p) % p;
    if (r == 0) throw std::invalid_argument("class_of_int: not a unit");
    // constants embed through the prime field, whose elements have indices 0..p-1
    return class_of_unit(static_cast<int>(r));
}

int LocalFieldCtx::unit_rep(SquareClass c) const {
    if (c.vpar != 0) throw std::invalid_argument("unit_rep: class has odd valuation");
    return c.upar == 0 ? 1 : res_.nonsquare();
}

int LocalFieldCtx::hilbert(SquareClass a, SquareClass b) const {
    // tame symbol on square classes: for a = u^{ia} pi^{ja}, b = u^{ib} pi^{jb},
    // (a, b) = Leg(-1)^{ja jb} (-1)^{ia jb + ib ja}
    int sign = 0;
    if (a.vpar && b.vpar && leg_minus_one() == -1) sign ^= 1;
    sign ^= (a.upar & b.vpar) ^ (b.upar & a.vpar);
    return sign ? -1 : 1;
}

namespace {

// Laurent-free truncated arithmetic over O/t^N for the solvability search:
// elements are digit vectors of length N over the residue field.
struct TruncRing {
    const ResidueField& rf;
    int N;

    std::vector<int> zero() const { return std::vector<int>(N, 0); }

    std::vector<int> mul(const std::vector<int>& x, const std::vector<int>& y) const {
        std::vector<int> r(N, 0);
        for (int i = 0; i < N; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j + i < N; ++j)
                if (y[j] != 0)
                    r[i + j] = rf.add(r[i + j], rf.mul(x[i], y[j]));
        }
        return r;
    }

    std::vector<int> sub(const std::vector<int>& x, const std::vector<int>& y) const {
        std::vector<int> r(N);
        for (int i = 0; i < N; ++i) r[i] = rf.sub(x[i], y[i]);
        return r;
    }

    int ord(const std::vector<int>& x) const {
        for (int i = 0; i < N; ++i)
            if (x[i] != 0) return i;
        return N;  // means >= N
    }
};

struct HilbertSearch {
    const ResidueField& rf;
    TruncRing ring;
    std::vector<int> a, b;  // coefficients as truncated series
    int N;
    std::vector<int> x, y, z;
    bool found = false;

    HilbertSearch(const ResidueField& rf_, std::vector<int> a_, std::vector<int> b_, int N_)
        : rf(rf_), ring{rf_, N_}, a(std::move(a_)), b(std::move(b_)), N(N_) {
        x = ring.zero();
        y = ring.zero();
        z = ring.zero();
    }

    std::vector<int> value() const {
        auto ax2 = ring.mul(a, ring.mul(x, x));
        auto by2 = ring.mul(b, ring.mul(y, y));
        auto z2 = ring.mul(z, z);
        return ring.sub(ring.sub(z2, ax2), by2);
    }

    // Hensel: if f = 0 mod t^m and some partial derivative has order e with
    // m >= 2e + 1, a true solution exists.
    bool hensel_ok(int m) const {
        auto check = [&](const std::vector<int>& coef, const std::vector<int>& var) {
            // derivative 2 * coef * var (up to sign)
            int e = ring.ord(ring.mul(coef, var));
            return e < N && m >= 2 * e + 1;
        };
        std::vector<int> one = ring.zero();
        one[0] = 1;
        return check(a, x) || check(b, y) || check(one, z);
    }

    // Digits 0..depth-1 of (x, y, z) are assigned; any node with depth >= 1
    // represents a primitive triple (the all-zero leading digit is skipped at
    // the root) whose value vanishes mod t^depth.
    void dfs(int depth) {
        if (found) return;
        if (depth > 0) {
            int m = ring.ord(value());
            if (m >= N || hensel_ok(m)) {
                found = true;
                return;
            }
        }
        if (depth == N) return;
        for (int dx = 0; dx < rf.q() && !found; ++dx)
            for (int dy = 0; dy < rf.q() && !found; ++dy)
                for (int dz = 0; dz < rf.q() && !found; ++dz) {
                    if (depth == 0 && dx == 0 && dy == 0 && dz == 0) continue;
                    x[depth] = dx;
                    y[depth] = dy;
                    z[depth] = dz;
                    if (ring.ord(value()) >= depth + 1) dfs(depth + 1);
                }
        x[depth] = y[depth] = z[depth] = 0;
    }
};

}  // namespace

int LocalFieldCtx::hilbert_oracle(SquareClass a, SquareClass b, int N) const {
    auto rep = [&](SquareClass c) {
        std::vector<int> r(N, 0);
        r[c.vpar] = (c.upar == 0) ? 1 : res_.nonsquare();
        return r;
    };
    HilbertSearch search(res_, rep(a), rep(b), N);
    search.dfs(0);
    return search.found ? 1 : -1;
}

QuadExtInfo LocalFieldCtx::classify_quad_ext(SquareClass d) const {
    if (d.is_one())
        throw std::invalid_argument("classify_quad_ext: d = 1 is not a field extension");
    QuadExtInfo info;
    info.d = d;
    info.ramified = d.vpar == 1;
    info.f = info.ramified ? 1 : 2;
    info.qprime = info.ramified ? q() : q() * q();
    return info;
}

std::string LocalFieldCtx::json() const {
    std::ostringstream os;
    os << "{\"p\":" << res_.p() << ",\"k\":" << res_.k() << ",\"irreducible\":[";
    for (size_t j = 0; j < res_.modulus().size(); ++j) {
        if (j) os << ",";
        os << res_.modulus()[j];
    }
    os << "]}";
    return os.str();
}

// ---------------------------------------------------------------------------
// MultChar

MultChar MultChar::times(const MultChar& other) const {
    if (fdeg != other.fdeg)
        throw std::invalid_argument("MultChar::times: characters of different groups");
    return {d * other.d, z * other.z, fdeg};
}

Coeff MultChar::at_uniformizer(const LocalFieldCtx& ctx) const {
    return Coeff(ctx.hilbert(d, SQPI)) * z;
}

Coeff MultChar::eval(const LocalFieldCtx& ctx, long val, SquareClass unit) const {
    SquareClass xcls = unit;
    if (val % 2 != 0) xcls = xcls * SQPI;
    Coeff quad(ctx.hilbert(d, xcls));
    return quad * z.pow(val);
}

Coeff MultChar::at_minus_one(const LocalFieldCtx& ctx) const {
    return Coeff(ctx.hilbert(d, ctx.class_minus_one()));
}

MultChar abs_power_char(long q, long h) {
    return {SQ1, Coeff::q_pow_half(q, -h), 1};
}

// ---------------------------------------------------------------------------
// AddChar

std::complex<double> AddChar::digit_value(const ResidueField& rf, int digit) const {
    if (digit == 0) return {1.0, 0.0};
    int t = rf.trace(rf.mul(seed, digit));  // in [0, p)
    double ang = 2.0 * std::numbers::pi * t / rf.p();
    return {std::cos(ang), std::sin(ang)};
}

}  // namespace lgf
