#include "padicforms/localfield.hpp"

#include "padicforms/newton.hpp"

#include <climits>
#include <optional>
#include <random>

namespace padicforms {

struct LocalField::Data {
    explicit Data(const PadicContext& c) : ctx(c) {}

    PadicContext ctx;
    QPoly q;
    int n = 1, e = 1, f = 1;
    long a_num = 0;  // v(alpha) = a_num / e
    long x = 0, y = 1;
    bool native = false;
    QPoly varpi, varpi_inv, theta;
    std::optional<FiniteField> kfield;
    // column k of T holds the power-basis coordinates of w^i th^j, k = i f + j
    std::vector<std::vector<Rational>> T, Tinv;
    FpPoly rho;  // residue of p / w^e

    // O_L / 2^K in the integral basis (p = 2 only)
    int K = 0;
    std::int64_t mask = 0;
    std::vector<std::vector<std::vector<std::int64_t>>> S;
    std::vector<std::int64_t> varpi_ring;
};

namespace {

using Mat = std::vector<std::vector<Rational>>;
using RingVec = std::vector<std::int64_t>;

Mat invert(const Mat& A)
{
    const size_t n = A.size();
    Mat M = A, I(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) throw Error("InternalError", "integral basis matrix is singular");
        std::swap(M[piv], M[col]);
        std::swap(I[piv], I[col]);
        Rational inv = 1 / M[col][col];
        for (size_t j = 0; j < n; ++j) {
            M[col][j] *= inv;
            I[col][j] *= inv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || M[i][col] == 0) continue;
            Rational fct = M[i][col];
            for (size_t j = 0; j < n; ++j) {
                M[i][j] -= fct * M[col][j];
                I[i][j] -= fct * I[col][j];
            }
        }
    }
    return I;
}

std::vector<Rational> coords_of(const LocalField::Data& d, const QPoly& rep)
{
    std::vector<Rational> out(static_cast<size_t>(d.n));
    for (int i = 0; i < d.n; ++i)
        for (int k = 0; k < d.n; ++k) {
            Rational c = rep[k];
            if (c != 0) out[i] += d.Tinv[i][k] * c;
        }
    return out;
}

// w-level: e * v(x) computed from basis coordinates; LONG_MAX for zero
long level_of(const LocalField::Data& d, const std::vector<Rational>& c)
{
    long best = LONG_MAX;
    for (int k = 0; k < d.n; ++k) {
        if (c[k] == 0) continue;
        long lv = d.e * vp_nonzero(c[k], d.ctx.p()) + k / d.f;
        best = std::min(best, lv);
    }
    return best;
}

QPoly pow_mod(const QPoly& b, long k, const QPoly& q) { return powmod(b, static_cast<unsigned long>(k), q); }

// x * w^(-lvl)
QPoly shift_level(const LocalField::Data& d, const QPoly& x, long lvl)
{
    if (lvl == 0) return x;
    if (lvl > 0) return mulmod(x, pow_mod(d.varpi_inv, lvl, d.q), d.q);
    return mulmod(x, pow_mod(d.varpi, -lvl, d.q), d.q);
}

FpPoly residue_of_unit(const LocalField::Data& d, const std::vector<Rational>& c)
{
    const u64 p = d.ctx.p_ui();
    std::vector<u64> r(static_cast<size_t>(d.f));
    for (int j = 0; j < d.f; ++j) r[j] = mod_int(c[j], d.ctx.p()).get_ui();
    return d.kfield->reduce(FpPoly(p, std::move(r)));
}

// ---- arithmetic in O_L / 2^K ----

RingVec ring_of(const LocalField::Data& d, const std::vector<Rational>& c)
{
    RingVec v(static_cast<size_t>(d.n));
    Integer m = Integer(1) << d.K;
    for (int k = 0; k < d.n; ++k) v[k] = mod_int(c[k], m).get_si();
    return v;
}

RingVec ring_mul(const LocalField::Data& d, const RingVec& a, const RingVec& b)
{
    RingVec r(static_cast<size_t>(d.n), 0);
    for (int k = 0; k < d.n; ++k) {
        if (!a[k]) continue;
        for (int l = 0; l < d.n; ++l) {
            if (!b[l]) continue;
            std::int64_t ab = (a[k] * b[l]) & d.mask;
            const auto& s = d.S[k][l];
            for (int m = 0; m < d.n; ++m) r[m] = (r[m] + ab * s[m]) & d.mask;
        }
    }
    return r;
}

RingVec ring_one(const LocalField::Data& d)
{
    RingVec r(static_cast<size_t>(d.n), 0);
    r[0] = 1;
    return r;
}

RingVec ring_add(const LocalField::Data& d, const RingVec& a, const RingVec& b)
{
    RingVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) & d.mask;
    return r;
}

RingVec ring_sub(const LocalField::Data& d, const RingVec& a, const RingVec& b)
{
    RingVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] - b[i]) & d.mask;
    return r;
}

RingVec ring_scale(const LocalField::Data& d, const RingVec& a, std::int64_t s)
{
    RingVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] * s) & d.mask;
    return r;
}

RingVec ring_lift(const LocalField::Data& d, const FpPoly& r)
{
    RingVec v(static_cast<size_t>(d.n), 0);
    for (int j = 0; j < d.f; ++j) v[j] = static_cast<std::int64_t>(r[j]);
    return v;
}

RingVec ring_varpi_pow(const LocalField::Data& d, long k)
{
    RingVec r = ring_one(d);
    for (long i = 0; i < k; ++i) r = ring_mul(d, r, d.varpi_ring);
    return r;
}

FpPoly ring_residue(const LocalField::Data& d, const RingVec& u)
{
    std::vector<u64> r(static_cast<size_t>(d.f));
    for (int j = 0; j < d.f; ++j) r[j] = static_cast<u64>(u[j] & 1);
    return d.kfield->reduce(FpPoly(2, std::move(r)));
}

RingVec ring_inv(const LocalField::Data& d, const RingVec& u)
{
    FpPoly r = ring_residue(d, u);
    RingVec x = ring_lift(d, d.kfield->inv(r));
    RingVec two = ring_scale(d, ring_one(d), 2);
    for (int i = 0; i < d.K + 1; ++i) x = ring_mul(d, x, ring_sub(d, two, ring_mul(d, u, x)));
    return x;
}

long ring_level(const LocalField::Data& d, const RingVec& x)
{
    long best = static_cast<long>(d.e) * d.K;
    for (int k = 0; k < d.n; ++k) {
        if (!x[k]) continue;
        long v = __builtin_ctzll(static_cast<unsigned long long>(x[k]));
        best = std::min(best, static_cast<long>(d.e) * v + k / d.f);
    }
    return best;
}

FpPoly ring_residue_at(const LocalField::Data& d, const RingVec& x, long lvl)
{
    const long i0 = lvl % d.e, kk = lvl / d.e;
    std::vector<u64> r(static_cast<size_t>(d.f));
    for (int j = 0; j < d.f; ++j) r[j] = static_cast<u64>((x[i0 * d.f + j] >> kk) & 1);
    FpPoly out = d.kfield->reduce(FpPoly(2, std::move(r)));
    return d.kfield->mul(out, d.kfield->pow(d.rho, Integer(kk)));
}

// F_2-coordinates of a unit of O_L modulo squares (n + 1 bits).
std::vector<int> unit_bits_2(const LocalField::Data& d, RingVec u)
{
    const FiniteField& k = *d.kfield;
    const long e = d.e, f = d.f;
    std::vector<int> bits(static_cast<size_t>(d.n + 1), 0);
    {
        RingVec s = ring_lift(d, k.sqrt(ring_residue(d, u)));
        RingVec si = ring_inv(d, s);
        u = ring_mul(d, u, ring_mul(d, si, si));
    }
    FpPoly rho_sq = k.mul(d.rho, d.rho);
    FpPoly rho_sq_inv = k.inv(rho_sq);
    const RingVec one = ring_one(d);
    for (int guard = 0; guard < 8 * e + 8; ++guard) {
        RingVec delta = ring_sub(d, u, one);
        long L = ring_level(d, delta);
        if (L > 2 * e) return bits;
        FpPoly r = ring_residue_at(d, delta, L);
        if (L < 2 * e && L % 2 == 0) {
            RingVec w = ring_add(d, one, ring_mul(d, ring_varpi_pow(d, L / 2), ring_lift(d, k.sqrt(r))));
            RingVec wi = ring_inv(d, w);
            u = ring_mul(d, u, ring_mul(d, wi, wi));
        } else if (L < 2 * e) {
            RingVec pw = ring_varpi_pow(d, L);
            auto c = k.coords(r);
            for (long j = 0; j < f; ++j) {
                if (!c[j]) continue;
                bits[static_cast<size_t>(((L - 1) / 2) * f + j)] = 1;
                RingVec th = ring_lift(d, FpPoly::monomial(2, 1, static_cast<int>(j)));
                RingVec w = ring_add(d, one, ring_mul(d, pw, th));
                u = ring_mul(d, u, ring_inv(d, w));
            }
        } else {
            FpPoly rr = k.mul(r, rho_sq_inv);
            if (k.trace(rr) == 0) {
                RingVec xh = ring_scale(d, ring_lift(d, k.artin_schreier(rr)), 2);
                RingVec wi = ring_inv(d, ring_add(d, one, xh));
                u = ring_mul(d, u, ring_mul(d, wi, wi));
            } else {
                bits[static_cast<size_t>(d.n)] = 1;
                FpPoly r0;
                for (int j = 0; j < f; ++j) {
                    r0 = k.reduce(FpPoly::monomial(2, 1, j));
                    if (k.trace(r0) == 1) break;
                }
                RingVec w = ring_add(d, one, ring_scale(d, ring_lift(d, r0), 4));
                u = ring_mul(d, u, ring_inv(d, w));
            }
        }
    }
    throw Error("InternalError", "unit square-class reduction did not terminate");
}

void build_native(LocalField::Data& d)
{
    const int n = d.n;
    d.T.assign(n, std::vector<Rational>(n));
    QPoly wpow = QPoly(1);
    for (int i = 0; i < d.e; ++i) {
        QPoly th = wpow;
        for (int j = 0; j < d.f; ++j) {
            int k = i * d.f + j;
            for (int r = 0; r < n; ++r) d.T[r][k] = th[r];
            th = mulmod(th, d.theta, d.q);
        }
        wpow = mulmod(wpow, d.varpi, d.q);
    }
    d.Tinv = invert(d.T);
    // rho = res(p / w^e)
    QPoly pw = shift_level(d, QPoly(Rational(d.ctx.p())), d.e);
    d.rho = residue_of_unit(d, coords_of(d, pw));
    if (d.ctx.p() == 2) {
        d.K = 4;
        d.mask = (std::int64_t(1) << d.K) - 1;
        std::vector<QPoly> B(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) {
            std::vector<Rational> col(static_cast<size_t>(n));
            for (int r = 0; r < n; ++r) col[r] = d.T[r][k];
            B[k] = QPoly(col);
        }
        d.S.assign(n, std::vector<std::vector<std::int64_t>>(n));
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                auto c = coords_of(d, mulmod(B[k], B[l], d.q));
                for (const auto& x : c)
                    if (x != 0 && vp_nonzero(x, d.ctx.p()) < 0)
                        throw Error("InternalError", "integral basis is not closed under products");
                d.S[k][l] = ring_of(d, c);
            }
        d.varpi_ring = ring_of(d, coords_of(d, d.varpi % d.q));
    }
    d.native = true;
}

long inverse_mod(long a, long m)
{
    a %= m;
    if (a < 0) a += m;
    for (long x = 0; x < m; ++x)
        if ((a * x) % m == 1 % m) return x;
    throw Error("InternalError", "no modular inverse");
}

}  // namespace

LocalField LocalField::base(const PadicContext& ctx) { return adjoin_root(ctx, QPoly::x()); }

LocalField LocalField::adjoin_root(const PadicContext& ctx, const QPoly& q0, int native_limit)
{
    if (q0.degree() < 1) throw Error("NotIrreducible", "modulus must have positive degree");
    auto d = std::make_shared<Data>(ctx);
    d->q = q0.monic();
    d->n = d->q.degree();
    const Rational& pi = ctx.pi();
    if (d->n == 1) {
        d->e = d->f = 1;
        d->a_num = 0;
        d->x = 0;
        d->y = 1;
        d->varpi = QPoly(pi);
        d->varpi_inv = QPoly(Rational(1 / pi));
        d->theta = QPoly(1);
        d->kfield.emplace(FpPoly(ctx.p_ui(), {ctx.p_ui() - 1, 1}));
    } else {
        NewtonPolygon np = newton_polygon(d->q, ctx);
        if (!np.one_edge() || !reduction_irreducible(d->q, ctx))
            throw Error("NotIrreducible", "irreducibility of the modulus is not certified");
        const Rational m = np.edges[0].slope;
        const long dd = m.get_den().get_si();
        const long a = -m.get_num().get_si();
        FpPoly cbar = residual_polynomial(d->q, np.edges[0], ctx);
        d->e = static_cast<int>(dd);
        d->f = d->n / d->e;
        d->a_num = a;
        d->x = dd == 1 ? 0 : inverse_mod(a, dd);
        d->y = (1 - d->x * a) / dd;
        QPoly alpha = QPoly::x();
        d->varpi = mulmod(pow_mod(alpha, d->x, d->q), QPoly(qpow(pi, d->y)), d->q);
        d->varpi_inv = invmod(d->varpi, d->q);
        d->theta = mulmod(pow_mod(alpha, dd, d->q), QPoly(qpow(pi, -a)), d->q);
        d->kfield.emplace(cbar.monic());
    }
    if (d->n <= native_limit) build_native(*d);
    return LocalField(std::move(d));
}

const PadicContext& LocalField::ctx() const { return d_->ctx; }
const QPoly& LocalField::modulus() const { return d_->q; }
int LocalField::degree() const { return d_->n; }
int LocalField::e() const { return d_->e; }
int LocalField::f() const { return d_->f; }
bool LocalField::native() const { return d_->native; }
long LocalField::uniformizer_alpha_exp() const { return d_->x; }
long LocalField::uniformizer_pi_exp() const { return d_->y; }
const FiniteField& LocalField::residue_field() const { return *d_->kfield; }

LocalFieldElement LocalField::element(const QPoly& rep) const { return LocalFieldElement(*this, rep); }
LocalFieldElement LocalField::element(const Rational& c) const { return LocalFieldElement(*this, QPoly(c)); }
LocalFieldElement LocalField::element(long c) const { return element(Rational(c)); }
LocalFieldElement LocalField::generator() const
{
    if (d_->n == 1) return element(-d_->q[0]);
    return element(QPoly::x());
}
LocalFieldElement LocalField::uniformizer() const { return element(d_->varpi); }
LocalFieldElement LocalField::pi() const { return element(d_->ctx.pi()); }

LocalFieldElement::LocalFieldElement(LocalField field, QPoly rep) : field_(std::move(field))
{
    const QPoly& q = field_.modulus();
    if (q.degree() == 1)
        rep_ = QPoly(rep.eval(-q[0]));
    else
        rep_ = rep % q;
}

LocalFieldElement LocalFieldElement::operator+(const LocalFieldElement& o) const
{
    return LocalFieldElement(field_, rep_ + o.rep_);
}
LocalFieldElement LocalFieldElement::operator-(const LocalFieldElement& o) const
{
    return LocalFieldElement(field_, rep_ - o.rep_);
}
LocalFieldElement LocalFieldElement::operator*(const LocalFieldElement& o) const
{
    return LocalFieldElement(field_, rep_ * o.rep_);
}
LocalFieldElement LocalFieldElement::operator-() const { return LocalFieldElement(field_, -rep_); }

LocalFieldElement LocalFieldElement::inverse() const
{
    if (is_zero()) throw Error("DomainError", "inverse of zero");
    if (field_.degree() == 1) return LocalFieldElement(field_, QPoly(Rational(1 / rep_[0])));
    return LocalFieldElement(field_, invmod(rep_, field_.modulus()));
}

LocalFieldElement LocalFieldElement::pow(long k) const
{
    if (k < 0) return inverse().pow(-k);
    if (field_.degree() == 1) return LocalFieldElement(field_, QPoly(qpow(rep_[0], k)));
    return LocalFieldElement(field_, powmod(rep_, static_cast<unsigned long>(k), field_.modulus()));
}

bool SquareClassTag::is_trivial() const
{
    if (parity) return false;
    for (int b : unit_bits)
        if (b) return false;
    return true;
}

std::string SquareClassTag::str() const
{
    std::string s = "v" + std::to_string(parity) + ":";
    for (int b : unit_bits) s += static_cast<char>('0' + b);
    return s;
}

Rational norm(const LocalFieldElement& x)
{
    if (x.field().degree() == 1) return x.rep()[0];
    return resultant(x.field().modulus(), x.rep());
}

Valuation valuation(const LocalFieldElement& x)
{
    if (x.is_zero()) return std::nullopt;
    Rational v(vp_nonzero(norm(x), x.field().ctx().p()), x.field().degree());
    v.canonicalize();
    return v;
}

std::vector<Rational> basis_coords(const LocalFieldElement& x)
{
    const auto& d = x.field().data();
    if (!d.native) throw Error("NativeLimit", "field degree exceeds the native limit");
    return coords_of(d, x.rep());
}

namespace {

struct Decomposed {
    long level;               // e * v(x)
    std::vector<Rational> c;  // basis coordinates of the unit part x w^(-level)
};

Decomposed decompose(const LocalFieldElement& x)
{
    const auto& d = x.field().data();
    if (!d.native) throw Error("NativeLimit", "field degree exceeds the native limit");
    if (x.is_zero()) throw Error("DomainError", "square class of zero");
    auto c = coords_of(d, x.rep());
    long lvl = level_of(d, c);
    QPoly u = shift_level(d, x.rep(), lvl);
    return {lvl, coords_of(d, u)};
}

std::vector<int> unit_bits(const LocalField::Data& d, const std::vector<Rational>& uc)
{
    if (d.ctx.p() == 2) return unit_bits_2(d, ring_of(d, uc));
    return {d.kfield->quadratic_character(residue_of_unit(d, uc)) == 1 ? 0 : 1};
}

}  // namespace

SquareClassTag square_class(const LocalFieldElement& x)
{
    const auto& d = x.field().data();
    Decomposed dc = decompose(x);
    SquareClassTag tag;
    tag.parity = static_cast<int>(((dc.level % 2) + 2) % 2);
    tag.unit_bits = unit_bits(d, dc.c);
    return tag;
}

bool is_square(const LocalFieldElement& x)
{
    if (x.is_zero()) throw Error("DomainError", "is_square of zero");
    if (x.field().degree() == 1) return qp::is_square(x.rep()[0], x.field().ctx());
    return square_class(x).is_trivial();
}

namespace {

struct SpanF2 {
    std::vector<std::vector<int>> rows;  // reduced echelon rows with pivot positions
    std::vector<int> pivots;

    std::vector<int> reduce(std::vector<int> v) const
    {
        for (size_t r = 0; r < rows.size(); ++r)
            if (v[pivots[r]])
                for (size_t j = 0; j < v.size(); ++j) v[j] ^= rows[r][j];
        return v;
    }
    bool add(const std::vector<int>& v0)
    {
        auto v = reduce(v0);
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j]) {
                for (auto& row : rows)
                    if (row[j])
                        for (size_t k = 0; k < v.size(); ++k) row[k] ^= v[k];
                rows.push_back(v);
                pivots.push_back(static_cast<int>(j));
                return true;
            }
        return false;
    }
    bool contains(const std::vector<int>& v) const
    {
        auto r = reduce(v);
        for (int b : r)
            if (b) return false;
        return true;
    }
};

std::vector<int> full_vector(const SquareClassTag& t)
{
    std::vector<int> v{t.parity};
    v.insert(v.end(), t.unit_bits.begin(), t.unit_bits.end());
    return v;
}

LocalFieldElement strip_even_level(const LocalFieldElement& x)
{
    const auto& d = x.field().data();
    auto c = coords_of(d, x.rep());
    long lvl = level_of(d, c);
    long k = lvl >= 0 ? lvl / 2 : -((-lvl + 1) / 2);
    return LocalFieldElement(x.field(), shift_level(d, x.rep(), 2 * k));
}

int hilbert_dyadic(const LocalFieldElement& a0, const LocalFieldElement& b0)
{
    const LocalField& L = a0.field();
    const auto& d = L.data();
    LocalFieldElement a = strip_even_level(a0), b = strip_even_level(b0);
    if (is_square(b) || is_square(a)) return 1;
    SquareClassTag ta = square_class(a);
    // the norms from L(sqrt b) form an index-2 subgroup: span its image
    SpanF2 span;
    const size_t target = static_cast<size_t>(d.n + 1);
    auto feed = [&](const LocalFieldElement& x, const LocalFieldElement& y) {
        LocalFieldElement z = x * x - b * y * y;
        if (z.is_zero()) return;
        span.add(full_vector(square_class(z)));
    };
    const LocalFieldElement one = L.element(1), zero = L.element(0);
    feed(zero, one);
    feed(one, one);
    LocalFieldElement w = L.uniformizer();
    LocalFieldElement th = L.element(d.theta);
    LocalFieldElement wi = one;
    for (int i = 0; i < 2 * d.e + 2 && span.rows.size() < target; ++i) {
        LocalFieldElement tj = one;
        for (int j = 0; j < d.f && span.rows.size() < target; ++j) {
            feed(wi * tj, one);
            feed(one + wi * tj, one);
            feed(one, wi * tj);
            tj = tj * th;
        }
        wi = wi * w;
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> dig(-4, 4);
    for (int s = 0; s < 4000 && span.rows.size() < target; ++s) {
        QPoly xr, yr;
        for (int k = 0; k < d.n; ++k) {
            std::vector<Rational> col(static_cast<size_t>(d.n));
            for (int r = 0; r < d.n; ++r) col[r] = d.T[r][k];
            QPoly bk(col);
            xr += bk * Rational(dig(rng));
            yr += bk * Rational(dig(rng));
        }
        feed(L.element(xr), L.element(yr));
    }
    if (span.rows.size() != target) throw Error("SearchExhausted", "norm subgroup not spanned within the sample cap");
    return span.contains(full_vector(ta)) ? 1 : -1;
}

int hilbert_tame(const LocalFieldElement& a, const LocalFieldElement& b)
{
    const auto& d = a.field().data();
    Decomposed da = decompose(a), db = decompose(b);
    const FiniteField& k = *d.kfield;
    FpPoly ua = residue_of_unit(d, da.c), ub = residue_of_unit(d, db.c);
    long al = da.level, be = db.level;
    // (-1)^(al be) ua^be ub^(-al)
    FpPoly val = k.one();
    auto powz = [&](const FpPoly& x, long e) { return e >= 0 ? k.pow(x, Integer(e)) : k.pow(k.inv(x), Integer(-e)); };
    val = k.mul(powz(ua, be), powz(ub, -al));
    if ((al & 1) && (be & 1)) val = k.sub(FpPoly(k.p(), {}), val);
    return k.quadratic_character(val);
}

}  // namespace

int hilbert_symbol_native(const LocalFieldElement& a, const LocalFieldElement& b)
{
    if (a.is_zero() || b.is_zero()) throw Error("DomainError", "Hilbert symbol of zero");
    if (!a.field().same_as(b.field())) throw Error("DomainError", "elements of different fields");
    if (a.field().ctx().p() == 2) return hilbert_dyadic(a, b);
    return hilbert_tame(a, b);
}

int hilbert_symbol(const LocalFieldElement& a, const LocalFieldElement& b)
{
    if (a.field().degree() == 1) {
        if (a.is_zero() || b.is_zero()) throw Error("DomainError", "Hilbert symbol of zero");
        return qp::hilbert_symbol(a.rep()[0], b.rep()[0], a.field().ctx());
    }
    if (!a.field().native()) {
        // (c, x)_L = (c, N x)_{Q_p} for c in Q_p
        if (a.is_zero() || b.is_zero()) throw Error("DomainError", "Hilbert symbol of zero");
        const auto& ctx = a.field().ctx();
        if (a.rep().degree() == 0) return qp::hilbert_symbol(a.rep()[0], norm(b), ctx);
        if (b.rep().degree() == 0) return qp::hilbert_symbol(b.rep()[0], norm(a), ctx);
    }
    return hilbert_symbol_native(a, b);
}

int i2_class(const LocalFieldElement& u) { return hilbert_symbol(u, -u.field().pi()); }

}  // namespace padicforms
