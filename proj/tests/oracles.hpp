#pragma once

// Brute-force reference computations used only by the tests.

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace oracle {

inline long ipow(long b, int k)
{
    long r = 1;
    while (k-- > 0) r *= b;
    return r;
}

inline int vp(__int128 x, long p)
{
    if (x == 0) return 1000;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

/* Solvability of z^2 = a x^2 + b y^2 over Q_p for small integers a, b:
 * enumerate primitive triples modulo p^M (one coordinate normalized to 1),
 * accept a solution once a one-variable Hensel certificate holds, reject when
 * no primitive solution exists modulo p^M. */
inline int conic(long a, long b, long p)
{
    for (int M = (p == 2 ? 5 : 2); M <= 12; ++M) {
        const long pm = ipow(p, M);
        bool any = false;
        for (int fixed = 0; fixed < 3; ++fixed) {
            for (long u = 0; u < pm; ++u) {
                for (long w = 0; w < pm; ++w) {
                    long xyz[3];
                    xyz[fixed] = 1;
                    xyz[(fixed + 1) % 3] = u;
                    xyz[(fixed + 2) % 3] = w;
                    __int128 x = xyz[0], y = xyz[1], z = xyz[2];
                    __int128 F = z * z - a * x * x - b * y * y;
                    if (F % pm != 0) continue;
                    any = true;
                    int vF = vp(F, p);
                    int g[3] = {vp(2 * a * x, p), vp(2 * b * y, p), vp(2 * z, p)};
                    for (int k = 0; k < 3; ++k)
                        if (g[k] < 1000 && vF > 2 * g[k]) return 1;
                }
            }
        }
        if (!any) return -1;
    }
    throw std::runtime_error("conic oracle undecided");
}

// Nontrivial zero of the diagonal form sum c_i x_i^2 (dimension <= 4) via the same search.
inline bool form_isotropic(const std::vector<long>& c, long p)
{
    const int n = static_cast<int>(c.size());
    for (int M = (p == 2 ? 3 : 1); M <= (p == 2 ? 6 : 4); ++M) {
        const long pm = ipow(p, M);
        bool any = false;
        long total = 1;
        for (int i = 1; i < n; ++i) total *= pm;
        for (int fixed = 0; fixed < n; ++fixed) {
            for (long idx = 0; idx < total; ++idx) {
                long v[4];
                long r = idx;
                for (int i = 0; i < n; ++i) {
                    if (i == fixed) {
                        v[i] = 1;
                        continue;
                    }
                    v[i] = r % pm;
                    r /= pm;
                }
                __int128 F = 0;
                for (int i = 0; i < n; ++i) F += static_cast<__int128>(c[i]) * v[i] * v[i];
                if (F % pm != 0) continue;
                any = true;
                int vF = vp(F, p);
                for (int i = 0; i < n; ++i) {
                    int g = vp(static_cast<__int128>(2) * c[i] * v[i], p);
                    if (g < 1000 && vF > 2 * g) return true;
                }
            }
        }
        if (!any) return false;
    }
    throw std::runtime_error("form oracle undecided");
}

}  // namespace oracle
