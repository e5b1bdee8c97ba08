#include "padicforms/finite_field.hpp"

#include <algorithm>

namespace padicforms {

namespace {

u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

std::vector<u64> prime_divisors(int n)
{
    std::vector<u64> out;
    for (int r = 2; r * r <= n; ++r) {
        if (n % r == 0) {
            out.push_back(r);
            while (n % r == 0) n /= r;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

u64 fp_pow(u64 a, u64 e, u64 p)
{
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 fp_inv(u64 a, u64 p)
{
    if (a % p == 0) throw Error("DomainError", "inverse of zero in F_p");
    return fp_pow(a, p - 2, p);
}

FpPoly::FpPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs))
{
    for (auto& x : c_) x %= p_;
    trim();
}

FpPoly FpPoly::monomial(u64 p, u64 c, int k)
{
    std::vector<u64> v(static_cast<size_t>(k) + 1, 0);
    v[k] = c;
    return FpPoly(p, std::move(v));
}

void FpPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const
{
    std::vector<u64> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = ((*this)[static_cast<int>(i)] + o[static_cast<int>(i)]) % p_;
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const
{
    std::vector<u64> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = ((*this)[static_cast<int>(i)] + p_ - o[static_cast<int>(i)]) % p_;
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly& o) const
{
    if (is_zero() || o.is_zero()) return FpPoly(p_, {});
    std::vector<u64> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = (r[i + j] + mulm(c_[i], o.c_[j], p_)) % p_;
    }
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::scale(u64 s) const
{
    std::vector<u64> r = c_;
    for (auto& x : r) x = mulm(x, s % p_, p_);
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::monic() const
{
    if (is_zero()) return *this;
    return scale(fp_inv(lc(), p_));
}

FpPoly FpPoly::derivative() const
{
    if (c_.size() <= 1) return FpPoly(p_, {});
    std::vector<u64> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = mulm(c_[i], i % p_, p_);
    return FpPoly(p_, std::move(r));
}

u64 FpPoly::eval(u64 x) const
{
    u64 r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = (mulm(r, x, p_) + c_[i]) % p_;
    return r;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b)
{
    const u64 p = a.prime();
    if (b.is_zero()) throw Error("DomainError", "F_p polynomial division by zero");
    int db = b.degree();
    if (a.degree() < db) return {FpPoly(p, {}), a};
    std::vector<u64> r = a.coeffs();
    std::vector<u64> q(static_cast<size_t>(a.degree() - db + 1), 0);
    u64 inv = fp_inv(b.lc(), p);
    for (int i = a.degree(); i >= db; --i) {
        if (!r[i]) continue;
        u64 f = mulm(r[i], inv, p);
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + p - mulm(f, b.coeffs()[j], p)) % p;
    }
    r.resize(static_cast<size_t>(db));
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

FpPoly gcd(FpPoly a, FpPoly b)
{
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly powmod(const FpPoly& a, const Integer& k, const FpPoly& m)
{
    FpPoly r = FpPoly::constant(a.prime(), 1) % m, b = a % m;
    size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    if (k == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = (r * r) % m;
        if (mpz_tstbit(k.get_mpz_t(), i)) r = (r * b) % m;
    }
    return r;
}

namespace {

// x^(p^k) mod f by repeated p-th powering
FpPoly frobenius_power(const FpPoly& f, int k)
{
    const u64 p = f.prime();
    FpPoly x = FpPoly(p, {0, 1}) % f;
    for (int i = 0; i < k; ++i) x = powmod(x, Integer(static_cast<unsigned long>(p)), f);
    return x;
}

}  // namespace

bool is_irreducible(const FpPoly& f)
{
    const int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const u64 p = f.prime();
    FpPoly x(p, {0, 1});
    if (frobenius_power(f, n) != x % f) return false;
    for (u64 r : prime_divisors(n)) {
        FpPoly h = frobenius_power(f, n / static_cast<int>(r)) - x;
        if (gcd(f, h).degree() != 0) return false;
    }
    return true;
}

namespace {

FpPoly pth_root(const FpPoly& f)
{
    const u64 p = f.prime();
    std::vector<u64> r;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) r.push_back(f[i]);
    return FpPoly(p, std::move(r));
}

void squarefree_decompose(const FpPoly& f, int mult, std::vector<FpFactor>& out)
{
    const u64 p = f.prime();
    if (f.degree() <= 0) return;
    FpPoly d = f.derivative();
    if (d.is_zero()) {
        squarefree_decompose(pth_root(f), mult * static_cast<int>(p), out);
        return;
    }
    FpPoly c = gcd(f, d);
    FpPoly w = divmod(f, c).first;
    int i = 1;
    while (w.degree() > 0) {
        FpPoly y = gcd(w, c);
        FpPoly z = divmod(w, y).first;
        if (z.degree() > 0) out.push_back({z.monic(), i * mult});
        ++i;
        w = y;
        c = divmod(c, y).first;
    }
    if (c.degree() > 0) squarefree_decompose(pth_root(c), mult * static_cast<int>(p), out);
}

void equal_degree(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out)
{
    const u64 p = f.prime();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    while (true) {
        FpPoly a = random_poly(p, f.degree() - 1, rng);
        if (a.degree() <= 0) continue;
        FpPoly b;
        if (p == 2) {
            // trace map to F_2 over F_{2^d}
            FpPoly acc = a % f, s = a % f;
            for (int i = 1; i < d; ++i) {
                acc = (acc * acc) % f;
                s = s + acc;
            }
            b = s;
        } else {
            Integer e = (ipow(Integer(static_cast<unsigned long>(p)), d) - 1) / 2;
            b = powmod(a, e, f) - FpPoly::constant(p, 1);
        }
        FpPoly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(divmod(f, g).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

FpPoly random_poly(u64 p, int degree_bound, std::mt19937_64& rng)
{
    std::vector<u64> c(static_cast<size_t>(std::max(degree_bound, 0)) + 1);
    std::uniform_int_distribution<u64> dist(0, p - 1);
    for (auto& x : c) x = dist(rng);
    return FpPoly(p, std::move(c));
}

std::vector<FpFactor> factor(const FpPoly& f, std::mt19937_64& rng)
{
    if (f.is_zero()) throw Error("DomainError", "factorization of zero");
    const u64 p = f.prime();
    std::vector<FpFactor> sqf;
    squarefree_decompose(f.monic(), 1, sqf);
    std::vector<FpFactor> out;
    for (const auto& [g0, mult] : sqf) {
        FpPoly g = g0;
        FpPoly x(p, {0, 1});
        FpPoly h = x % g;
        for (int d = 1; g.degree() > 0; ++d) {
            if (2 * d > g.degree()) {
                out.push_back({g.monic(), mult});
                break;
            }
            h = powmod(h, Integer(static_cast<unsigned long>(p)), g);
            FpPoly part = gcd(g, h - x);
            if (part.degree() > 0) {
                std::vector<FpPoly> irr;
                equal_degree(part, d, rng, irr);
                for (auto& q : irr) out.push_back({q, mult});
                g = divmod(g, part).first;
                h = h % g;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return std::lexicographical_compare(a.factor.coeffs().rbegin(), a.factor.coeffs().rend(),
                                            b.factor.coeffs().rbegin(), b.factor.coeffs().rend());
    });
    // merge equal factors coming from different squarefree layers
    std::vector<FpFactor> merged;
    for (auto& fc : out) {
        if (!merged.empty() && merged.back().factor == fc.factor)
            merged.back().exponent += fc.exponent;
        else
            merged.push_back(fc);
    }
    return merged;
}

std::vector<FpFactor> factor(const FpPoly& f)
{
    std::mt19937_64 rng(0x5eed);
    return factor(f, rng);
}

FiniteField::FiniteField(FpPoly modulus) : modulus_(modulus.monic())
{
    if (!is_irreducible(modulus_)) throw Error("NotIrreducible", "residue field modulus is reducible");
}

Integer FiniteField::order() const { return ipow(Integer(static_cast<unsigned long>(p())), degree()); }

FpPoly FiniteField::inv(const FpPoly& a) const
{
    FpPoly r = reduce(a);
    if (r.is_zero()) throw Error("DomainError", "inverse of zero in finite field");
    return pow(r, order() - 2);
}

int FiniteField::quadratic_character(const FpPoly& a) const
{
    FpPoly r = reduce(a);
    if (r.is_zero()) return 0;
    if (p() == 2) return 1;
    FpPoly s = pow(r, (order() - 1) / 2);
    return s == one() ? 1 : -1;
}

FpPoly FiniteField::sqrt(const FpPoly& a) const
{
    FpPoly r = reduce(a);
    if (r.is_zero()) return r;
    if (p() == 2) return pow(r, order() / 2);
    if (quadratic_character(r) != 1) throw Error("DomainError", "square root of a nonsquare");
    // Tonelli-Shanks
    Integer q1 = order() - 1;
    unsigned long s = 0;
    while (mpz_even_p(q1.get_mpz_t())) {
        q1 /= 2;
        ++s;
    }
    FpPoly z;
    std::mt19937_64 rng(7);
    do {
        z = reduce(random_poly(p(), degree() - 1, rng));
    } while (z.is_zero() || quadratic_character(z) != -1);
    FpPoly c = pow(z, q1);
    FpPoly x = pow(r, (q1 + 1) / 2);
    FpPoly t = pow(r, q1);
    unsigned long m = s;
    while (t != one()) {
        unsigned long i = 0;
        FpPoly tt = t;
        while (tt != one()) {
            tt = mul(tt, tt);
            ++i;
        }
        FpPoly b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = mul(b, b);
        x = mul(x, b);
        c = mul(b, b);
        t = mul(t, c);
        m = i;
    }
    return x;
}

u64 FiniteField::trace(const FpPoly& a) const
{
    FpPoly acc = reduce(a), s = reduce(a);
    Integer pp(static_cast<unsigned long>(p()));
    for (int i = 1; i < degree(); ++i) {
        acc = pow(acc, pp);
        s = s + acc;
    }
    if (s.degree() > 0) throw Error("InternalError", "trace not in prime field");
    return s[0];
}

std::vector<u64> FiniteField::coords(const FpPoly& a) const
{
    FpPoly r = reduce(a);
    std::vector<u64> out(static_cast<size_t>(degree()));
    for (int j = 0; j < degree(); ++j) out[j] = r[j];
    return out;
}

FpPoly FiniteField::artin_schreier(const FpPoly& c) const
{
    if (p() != 2) throw Error("DomainError", "Artin-Schreier solve needs characteristic 2");
    const int f = degree();
    // columns: images of X^j under x -> x^2 + x
    std::vector<std::vector<u64>> M(f, std::vector<u64>(f + 1, 0));
    for (int j = 0; j < f; ++j) {
        FpPoly xj = reduce(FpPoly::monomial(2, 1, j));
        auto col = coords(add(mul(xj, xj), xj));
        for (int i = 0; i < f; ++i) M[i][j] = col[i];
    }
    auto rhs = coords(c);
    for (int i = 0; i < f; ++i) M[i][f] = rhs[i];
    std::vector<int> pivcol;
    int row = 0;
    for (int col = 0; col < f && row < f; ++col) {
        int piv = -1;
        for (int i = row; i < f; ++i)
            if (M[i][col]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[piv], M[row]);
        for (int i = 0; i < f; ++i)
            if (i != row && M[i][col])
                for (int j = 0; j <= f; ++j) M[i][j] ^= M[row][j];
        pivcol.push_back(col);
        ++row;
    }
    for (int i = row; i < f; ++i)
        if (M[i][f]) throw Error("DomainError", "x^2 + x = c has no solution (trace 1)");
    std::vector<u64> x(static_cast<size_t>(f), 0);
    for (int i = 0; i < row; ++i) x[pivcol[i]] = M[i][f];
    return FpPoly(2, std::move(x));
}

}  // namespace padicforms
