#include "padicforms/qpoly.hpp"

#include <algorithm>

namespace padicforms {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    for (auto& x : c_) x.canonicalize();
    trim();
}

QPoly::QPoly(const Rational& c)
{
    if (c != 0) c_.push_back(c);
}

QPoly QPoly::monomial(const Rational& c, int k)
{
    if (c == 0) return {};
    std::vector<Rational> v(static_cast<size_t>(k) + 1);
    v[k] = c;
    QPoly r;
    r.c_ = std::move(v);
    return r;
}

void QPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::operator[](int i) const
{
    if (i < 0 || i > degree()) return 0;
    return c_[i];
}

QPoly& QPoly::operator+=(const QPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    QPoly out;
    out.c_ = std::move(r);
    out.trim();
    return out;
}

QPoly& QPoly::operator*=(const QPoly& o)
{
    *this = *this * o;
    return *this;
}

QPoly& QPoly::operator*=(const Rational& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

QPoly QPoly::operator-() const
{
    QPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Rational QPoly::eval(const Rational& x) const
{
    Rational r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

QPoly QPoly::compose(const QPoly& inner) const
{
    QPoly r;
    for (size_t i = c_.size(); i-- > 0;) r = r * inner + QPoly(c_[i]);
    return r;
}

QPoly QPoly::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return QPoly(std::move(r));
}

QPoly QPoly::monic() const
{
    if (is_zero()) return {};
    return *this * Rational(1 / lc());
}

QPoly QPoly::shift(int k) const
{
    if (is_zero()) return {};
    if (k >= 0) {
        std::vector<Rational> r(static_cast<size_t>(k), Rational(0));
        r.insert(r.end(), c_.begin(), c_.end());
        return QPoly(std::move(r));
    }
    for (int i = 0; i < -k && i < static_cast<int>(c_.size()); ++i)
        if (c_[i] != 0) throw Error("DomainError", "negative shift drops nonzero terms");
    if (-k >= static_cast<int>(c_.size())) return {};
    return QPoly(std::vector<Rational>(c_.begin() - k, c_.end()));
}

QPoly QPoly::scale_var(const Rational& s) const
{
    QPoly r = *this;
    Rational pw = 1;
    for (auto& x : r.c_) {
        x *= pw;
        pw *= s;
    }
    r.trim();
    return r;
}

QPoly QPoly::pow(unsigned k) const
{
    QPoly r(1), b = *this;
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

int QPoly::t_order() const
{
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b)
{
    if (b.is_zero()) throw Error("DomainError", "polynomial division by zero");
    int db = b.degree();
    if (a.degree() < db) return {QPoly(), a};
    std::vector<Rational> r = a.coeffs();
    std::vector<Rational> q(static_cast<size_t>(a.degree() - db + 1));
    Rational inv = 1 / b.lc();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        Rational f = r[i] * inv;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
    }
    r.resize(static_cast<size_t>(db));
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly operator/(const QPoly& a, const QPoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("DomainError", "inexact polynomial division");
    return q;
}

QPoly gcd(QPoly a, QPoly b)
{
    while (!b.is_zero()) {
        QPoly r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

XGcd xgcd(const QPoly& a, const QPoly& b)
{
    QPoly r0 = a, r1 = b, s0 = 1, s1, t0, t1 = 1;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = 1 / r0.lc();
    return {r0 * inv, s0 * inv, t0 * inv};
}

QPoly invmod(const QPoly& a, const QPoly& m)
{
    XGcd x = xgcd(a % m, m);
    if (x.g.degree() != 0) throw Error("NotCoprime", "element is not invertible modulo the modulus");
    return x.s % m;
}

QPoly mulmod(const QPoly& a, const QPoly& b, const QPoly& m) { return (a * b) % m; }

QPoly powmod(const QPoly& a, unsigned long k, const QPoly& m)
{
    QPoly r = QPoly(1) % m, b = a % m;
    while (k) {
        if (k & 1) r = mulmod(r, b, m);
        k >>= 1;
        if (k) b = mulmod(b, b, m);
    }
    return r;
}

Rational resultant(const QPoly& a0, const QPoly& b0)
{
    if (a0.is_zero() || b0.is_zero()) return 0;
    QPoly a = a0, b = b0;
    Rational acc = 1;
    // Res(a,b) = (-1)^(da db) lc(b)^(da - dr) Res(b, r), r = a mod b
    while (true) {
        int da = a.degree(), db = b.degree();
        if (db == 0) return acc * qpow(b.lc(), da);
        if (da == 0) return acc * qpow(a.lc(), db);
        QPoly r = a % b;
        if (r.is_zero()) return 0;
        int dr = r.degree();
        if ((da % 2) && (db % 2)) acc = -acc;
        acc *= qpow(b.lc(), da - dr);
        a = std::move(b);
        b = std::move(r);
    }
}

QPoly squarefree_part(const QPoly& f)
{
    if (f.degree() <= 0) return f;
    QPoly g = gcd(f, f.derivative());
    return f / g;
}

QPoly charpoly_mod(const QPoly& a, const QPoly& m)
{
    // Hessenberg reduction of the multiplication matrix, then the standard recurrence
    const int n = m.degree();
    if (n <= 0) throw Error("DomainError", "charpoly modulo a constant");
    std::vector<std::vector<Rational>> H(n, std::vector<Rational>(n));
    QPoly col = a % m;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) H[i][j] = col[i];
        col = (col.shift(1)) % m;
    }
    for (int k = 1; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (H[i][k - 1] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != k) {
            std::swap(H[piv], H[k]);
            for (int i = 0; i < n; ++i) std::swap(H[i][piv], H[i][k]);
        }
        for (int i = k + 1; i < n; ++i) {
            if (H[i][k - 1] == 0) continue;
            Rational f = H[i][k - 1] / H[k][k - 1];
            for (int j = 0; j < n; ++j) H[i][j] -= f * H[k][j];
            for (int j = 0; j < n; ++j) H[j][k] += f * H[j][i];
        }
    }
    std::vector<QPoly> P(n + 1);
    P[0] = QPoly(1);
    for (int k = 1; k <= n; ++k) {
        P[k] = QPoly(std::vector<Rational>{-H[k - 1][k - 1], 1}) * P[k - 1];
        Rational prod = 1;
        for (int i = 1; i < k; ++i) {
            prod *= H[k - i][k - i - 1];
            if (prod == 0) break;
            P[k] -= P[k - i - 1] * Rational(prod * H[k - i - 1][k - 1]);
        }
    }
    return P[n];
}

}  // namespace padicforms

namespace padicforms {

std::string to_string(const QPoly& f)
{
    if (f.is_zero()) return "0";
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        Rational c = f[k];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = abs(c);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        if (k == 0)
            out += to_short_string(a);
        else if (a == 1)
            out += mono;
        else
            out += to_short_string(a) + "*" + mono;
    }
    return out;
}

}  // namespace padicforms
