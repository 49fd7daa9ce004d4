#include "tatami/polylab.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "tatami/gensets.hpp"

namespace tatami {

IntPoly s_poly(int n) {
    if (n < 0) throw std::domain_error("s_poly requires n >= 0");
    IntPoly p = IntPoly::constant(1);
    for (int i = 1; i <= n; ++i) p.mul_one_plus(i);
    return p;
}

IntPoly vh_poly(int n) {
    if (n < 2) throw std::domain_error("vh_poly requires n >= 2");
    IntPoly acc;
    if (n >= 3) {
        // term_i = S_{n-i-2} S_{i-1} z^{n-i-1}, updated incrementally:
        // term_i = term_{i-1} (1+z^{i-1}) / ((1+z^{n-i-1}) z)
        IntPoly term = s_poly(n - 3).shifted(n - 2);
        acc = term;
        for (int i = 2; i <= (n - 1) / 2; ++i) {
            term.mul_one_plus(i - 1);
            term.div_one_plus(n - i - 1);
            term = term.shifted(-1);
            acc += term;
        }
        acc *= 2;
    }
    const IntPoly s = s_poly((n - 2) / 2);
    acc += s * s;
    return acc;
}

mpz_class vh_coeff(int n, long k) {
    if (n < 2) throw std::domain_error("vh_coeff requires n >= 2");
    if (k < 0) return 0;
    mpz_class total = 0;
    for (int i = 1; i <= (n - 1) / 2; ++i) {
        const long rem = k - (n - i - 1);
        if (rem < 0) continue;
        mpz_class cls = 0;
        for (long k1 = 0; k1 <= rem; ++k1) cls += subset_sum_count(n - i - 2, k1) * subset_sum_count(i - 1, rem - k1);
        total += 2 * cls;
    }
    const int cap = (n - 2) / 2;
    for (long k1 = 0; k1 <= k; ++k1) total += subset_sum_count(cap, k1) * subset_sum_count(cap, k - k1);
    return total;
}

mpz_class vh_at_one(int n) {
    if (n < 2) throw std::domain_error("vh_at_one requires n >= 2");
    // Theorem-1 formula at z = 1: 2 sum_i 2^{n-i-2} 2^{i-1} + (2^{floor((n-2)/2)})^2
    mpz_class total = 0;
    if (n >= 3) {
        mpz_class term;
        mpz_ui_pow_ui(term.get_mpz_t(), 2, static_cast<unsigned long>(n - 3));
        total = 2 * ((n - 1) / 2) * term;
    }
    mpz_class sq;
    mpz_ui_pow_ui(sq.get_mpz_t(), 2, static_cast<unsigned long>(2 * ((n - 2) / 2)));
    return total + sq;
}

IntPoly cyclotomic(int m) {
    if (m < 1) throw std::domain_error("cyclotomic requires m >= 1");
    static std::map<int, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<mpz_class> xm(static_cast<std::size_t>(m) + 1);
    xm[0] = -1;
    xm.back() = 1;
    IntPoly num(std::move(xm));
    IntPoly den = IntPoly::constant(1);
    std::function<IntPoly(int)> phi = [&](int d) -> IntPoly {
        auto hit = cache.find(d);
        if (hit != cache.end()) return hit->second;
        std::vector<mpz_class> xd(static_cast<std::size_t>(d) + 1);
        xd[0] = -1;
        xd.back() = 1;
        IntPoly p(std::move(xd));
        IntPoly q = IntPoly::constant(1);
        for (int e = 1; e < d; ++e)
            if (d % e == 0) q = q * phi(e);
        IntPoly result = exact_divide(p, q);
        cache.emplace(d, result);
        return result;
    };
    for (int d = 1; d < m; ++d)
        if (m % d == 0) den = den * phi(d);
    IntPoly result = exact_divide(num, den);
    cache.emplace(m, result);
    return result;
}

IntPoly d_poly(int n) {
    if (n < 2) throw std::domain_error("d_poly requires n >= 2");
    // S-product form
    IntPoly form_s = IntPoly::constant(1);
    for (int m = (n - 2) / 2; m >= 1; m /= 2) form_s = form_s * s_poly(m);
    // cyclotomic-power form
    IntPoly form_phi = IntPoly::constant(1);
    for (int j = 1; 2 * j <= n - 2; ++j) {
        const int e = (n - 2) / (2 * j);
        const IntPoly phi = cyclotomic(2 * j);
        for (int t = 0; t < e; ++t) form_phi = form_phi * phi;
    }
    if (!(form_s == form_phi))
        throw std::logic_error("d_poly: S-product and cyclotomic forms disagree at n = " + std::to_string(n));
    return form_s;
}

IntPoly p_poly(int n) { return exact_divide(vh_poly(n), d_poly(n)); }

long predicted_deg_p(int n) {
    if (n < 2) throw std::domain_error("predicted_deg_p requires n >= 2");
    long odd_sum = 0;
    for (long k = 1; k <= n - 2; ++k) {
        long v = k;
        while (v % 2 == 0) v /= 2;
        odd_sum += v;
    }
    long binom = static_cast<long>(n - 1) * (n - 2) / 2;
    for (long m = (n - 2) / 2; m >= 1; m /= 2) binom -= m * (m + 1) / 2;
    if (odd_sum != binom)
        throw std::logic_error("predicted_deg_p: closed forms disagree at n = " + std::to_string(n));
    return odd_sum;
}

mpz_class p_at_one_predicted(int n) {
    if (n < 2) throw std::domain_error("p_at_one_predicted requires n >= 2");
    const unsigned long nu = static_cast<unsigned long>(__builtin_popcountll(static_cast<unsigned long long>(n - 2)));
    mpz_class two_nu;
    mpz_ui_pow_ui(two_nu.get_mpz_t(), 2, nu);
    const mpq_class value = mpq_class(n) * mpq_class(two_nu, 2);  // n * 2^(nu-1)
    mpq_class canon = value;
    canon.canonicalize();
    if (canon.get_den() != 1)
        throw std::logic_error("p_at_one_predicted: non-integral value at n = " + std::to_string(n));
    return canon.get_num();
}

mpz_class floor_halving_sum(const mpq_class& x) {
    if (x < 0) throw std::domain_error("floor_halving_sum requires x >= 0");
    mpz_class total = 0;
    mpz_class pow2 = 2;
    while (true) {
        // floor(x / 2^k + 1/2) = floor((2 num + den 2^k) / (2 den 2^k))
        const mpz_class num = 2 * x.get_num() + x.get_den() * pow2;
        const mpz_class den = 2 * x.get_den() * pow2;
        mpz_class term;
        mpz_fdiv_q(term.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (term == 0) break;
        total += term;
        pow2 *= 2;
    }
    return total;
}

IntPoly r_poly(int n) {
    if (n < 2) throw std::domain_error("r_poly requires n >= 2");
    const IntPoly vh = vh_poly(n);
    IntPoly r = vh + vh.reciprocal(n * (n - 1) / 2);
    r *= 2;
    return r;
}

std::optional<mpz_class> balanced_count(int n) {
    if (n < 2) throw std::domain_error("balanced_count requires n >= 2");
    const long total = static_cast<long>(n) * (n - 1) / 2;
    if (total % 2 != 0) return std::nullopt;
    return vh_poly(n)[static_cast<int>(total / 2)];
}

std::vector<mpz_class> pn_neg1_series(int N) {
    if (N < 0) throw std::domain_error("pn_neg1_series requires N >= 0");
    const std::size_t len = static_cast<std::size_t>(N) + 1;
    // 1/sqrt(1-4z^2) = sum_k C(2k,k) z^(2k)
    std::vector<mpz_class> a(len);
    for (std::size_t t = 0; 2 * t < len; ++t)
        mpz_bin_uiui(a[2 * t].get_mpz_t(), 2 * static_cast<unsigned long>(t), static_cast<unsigned long>(t));
    // multiply by (1+z)(1-2z) = 1 - z - 2z^2
    std::vector<mpz_class> b(len);
    for (std::size_t t = 0; t < len; ++t) {
        b[t] = a[t];
        if (t >= 1) b[t] -= a[t - 1];
        if (t >= 2) b[t] -= 2 * a[t - 2];
    }
    // divide by (1-2z^2): q_t = b_t + 2 q_{t-2}
    std::vector<mpz_class> q(len);
    for (std::size_t t = 0; t < len; ++t) {
        q[t] = b[t];
        if (t >= 2) q[t] += 2 * q[t - 2];
    }
    return q;
}

// ---- Sturm machinery ----

namespace {

mpz_class content(const IntPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly primitive(const IntPoly& p) {
    if (p.is_zero()) return p;
    const mpz_class g = content(p);
    std::vector<mpz_class> out(p.coeffs());
    for (auto& c : out) c /= g;
    return IntPoly(std::move(out));
}

IntPoly derivative(const IntPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<mpz_class> out(static_cast<std::size_t>(p.degree()));
    for (int t = 1; t <= p.degree(); ++t) out[static_cast<std::size_t>(t - 1)] = t * p[t];
    return IntPoly(std::move(out));
}

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) f = q g + R.
IntPoly prem(const IntPoly& f, const IntPoly& g) {
    IntPoly r = f;
    const int d = g.degree();
    const mpz_class lc = g[d];
    int e = f.degree() - d + 1;
    while (!r.is_zero() && r.degree() >= d) {
        IntPoly t = g.shifted(r.degree() - d);
        t *= r[r.degree()];
        r *= lc;
        r -= t;
        --e;
    }
    if (e > 0) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(e));
        r *= pw;
    }
    return r;
}

// Content-reduced Sturm chain: p, p', then each next = -remainder of the
// previous pair up to a positive factor.
std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain;
    chain.push_back(primitive(p));
    IntPoly d = derivative(chain[0]);
    if (d.is_zero()) return chain;
    chain.push_back(primitive(d));
    while (chain.back().degree() > 0) {
        const IntPoly& f = chain[chain.size() - 2];
        const IntPoly& g = chain.back();
        IntPoly r = prem(f, g);
        if (r.is_zero()) break;
        // The true remainder is R / lc(g)^(delta+1); keep -remainder's sign.
        const int delta = f.degree() - g.degree();
        int s = -1;
        if ((delta + 1) % 2 == 1 && sgn(g[g.degree()]) < 0) s = 1;
        IntPoly next = primitive(r);
        if (s < 0) next *= mpz_class(-1);
        chain.push_back(std::move(next));
    }
    return chain;
}

int variations_at(const std::vector<IntPoly>& chain, const mpq_class& x) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        const int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Sign variation count "at +/- infinity": use leading-coefficient signs.
int variations_at_inf(const std::vector<IntPoly>& chain, int direction) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        if (p.is_zero()) continue;
        int s = sgn(p[p.degree()]);
        if (direction < 0 && p.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

int real_roots_in(const IntPoly& p, const mpq_class& a, const mpq_class& b) {
    if (p.is_zero()) throw std::domain_error("zero polynomial");
    if (!(a < b)) throw std::domain_error("empty interval");
    if (p.sign_at(a) == 0) throw std::domain_error("left endpoint is a root");
    const auto chain = sturm_chain(p);
    return variations_at(chain, a) - variations_at(chain, b);
}

int real_roots_total(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("zero polynomial");
    if (p.degree() == 0) return 0;
    const auto chain = sturm_chain(p);
    return variations_at_inf(chain, -1) - variations_at_inf(chain, +1);
}

RootBracket bisect_root(const IntPoly& p, mpq_class a, mpq_class b, int steps) {
    int sa = p.sign_at(a);
    const int sb = p.sign_at(b);
    if (sa == 0 || sb == 0 || sa == sb) throw std::domain_error("bisect_root needs a sign change");
    for (int t = 0; t < steps; ++t) {
        mpq_class mid = (a + b) / 2;
        const int sm = p.sign_at(mid);
        if (sm == 0) return {mid, mid};
        if (sm == sa) {
            a = mid;
        } else {
            b = mid;
        }
    }
    return {a, b};
}

// ---- conjecture checking ----

namespace {

// Truncated product prod_{m>=1} (1+z^m), len coefficients (A000009).
std::vector<mpz_class> distinct_partition_series(int len) {
    std::vector<mpz_class> c(static_cast<std::size_t>(len));
    c[0] = 1;
    for (int m = 1; m < len; ++m)
        for (int t = len - 1; t >= m; --t) c[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(t - m)];
    return c;
}

std::string bracket_str(const RootBracket& br) {
    const double lo = br.lo.get_d(), hi = br.hi.get_d();
    std::ostringstream out;
    out.precision(12);
    out << "[" << lo << ", " << hi << "]";
    return out.str();
}

}  // namespace

std::vector<ConjectureReport> check_conjectures(int nmax) {
    if (nmax < 3) throw std::domain_error("check_conjectures requires nmax >= 3");
    std::vector<ConjectureReport> reports;

    std::map<int, IntPoly> vh_cache, p_cache;
    const auto vh_of = [&](int n) -> const IntPoly& {
        auto it = vh_cache.find(n);
        if (it == vh_cache.end()) it = vh_cache.emplace(n, vh_poly(n)).first;
        return it->second;
    };
    const auto p_of = [&](int n) -> const IntPoly& {
        auto it = p_cache.find(n);
        if (it == p_cache.end()) it = p_cache.emplace(n, p_poly(n)).first;
        return it->second;
    };

    // vhcon-a: low coefficients of VH_n against prod (1+z^m)^2
    {
        const int cap = std::min(nmax, 20);
        const auto pd = distinct_partition_series(cap);
        std::vector<mpz_class> sq(static_cast<std::size_t>(cap));
        for (int s = 0; s < cap; ++s)
            for (int t = 0; s + t < cap; ++t) sq[static_cast<std::size_t>(s + t)] += pd[static_cast<std::size_t>(s)] * pd[static_cast<std::size_t>(t)];
        ConjectureReport rep{"vhcon-a", "2 <= n <= " + std::to_string(cap), true, ""};
        for (int n = 2; n <= cap && rep.holds; ++n) {
            const IntPoly& vh = vh_of(n);
            for (int k = 0; k <= n - 2; ++k) {
                if (vh[k] != sq[static_cast<std::size_t>(k)]) {
                    rep.holds = false;
                    rep.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                    break;
                }
            }
        }
        reports.push_back(std::move(rep));
    }

    // vhcon-b: top coefficients of VH_n against 2 prod (1+z^m)
    {
        const int cap = std::min(nmax, 20);
        const auto pd = distinct_partition_series(cap);
        ConjectureReport rep{"vhcon-b", "4 <= n <= " + std::to_string(cap), true, ""};
        for (int n = 4; n <= cap && rep.holds; ++n) {
            const IntPoly& vh = vh_of(n);
            const int deg = vh.degree();
            for (int k = 0; k < n - 3; ++k) {
                if (vh[deg - k] != 2 * pd[static_cast<std::size_t>(k)]) {
                    rep.holds = false;
                    rep.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                    break;
                }
            }
        }
        reports.push_back(std::move(rep));
    }

    // pcon-a: coefficient-prefix stabilization P_n vs P_{n+j}
    {
        const int cap = std::min(nmax, 30);
        ConjectureReport rep{"pcon-a", "literal reading, n <= " + std::to_string(cap), true, ""};
        std::ostringstream windows;
        for (int n = 3; n <= cap; ++n) {
            // n mod 2 is never 2, so the smallest meaningful modulus is 4.
            for (int k = 2; (1 << k) <= n && n % (1 << k) == 2; ++k) {
                const int ibound = (n - 2) / (1 << (k - 1));
                const int jbound = 1 << k;
                int widest = -1;
                for (int j = 1; j <= jbound; ++j) {
                    const IntPoly& pn = p_of(n);
                    const IntPoly& pm = p_of(n + j);
                    int agree = 0;
                    while (agree <= std::min(pn.degree(), pm.degree()) && pn[agree] == pm[agree]) ++agree;
                    widest = widest < 0 ? agree - 1 : std::min(widest, agree - 1);
                    for (int i = 0; i <= ibound; ++i) {
                        if (pn[i] != pm[i] && rep.holds) {
                            rep.holds = false;
                            rep.detail = "first failure n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                         " j=" + std::to_string(j) + " i=" + std::to_string(i) + " (" +
                                         pn[i].get_str() + " vs " + pm[i].get_str() + ")";
                        }
                    }
                }
                windows << " n=" << n << ",k=" << k << ":claimed<=" << ibound << ",holds<=" << widest << ";";
            }
        }
        rep.detail += "; widest common-prefix windows over j:" + windows.str();
        reports.push_back(std::move(rep));
    }

    // pcon-b: odd n, exactly one real root in (-1, -1/2]; alpha_n decreasing
    {
        const int cap = std::min(nmax, 25);
        ConjectureReport rep{"pcon-b", "odd 3 <= n <= " + std::to_string(cap), true, ""};
        std::ostringstream alphas;
        mpq_class prev_lo;
        bool have_prev = false, monotone = true;
        for (int n = 3; n <= cap; n += 2) {
            const IntPoly& p = p_of(n);
            const int roots = real_roots_in(p, mpq_class(-1), mpq_class(-1, 2));
            if (roots != 1) {
                rep.holds = false;
                rep.detail = "n=" + std::to_string(n) + " has " + std::to_string(roots) + " roots in (-1,-1/2]";
                break;
            }
            const mpq_class half(-1, 2);
            const RootBracket br =
                p.sign_at(half) == 0 ? RootBracket{half, half} : bisect_root(p, half, mpq_class(-1), 50);
            alphas << " alpha_" << n << "=" << bracket_str(br) << ";";
            // bisect_root was called with reversed ends; normalize to lo < hi
            const mpq_class lo = std::min(br.lo, br.hi);
            const mpq_class hi = std::max(br.lo, br.hi);
            if (have_prev && !(hi < prev_lo)) monotone = false;
            prev_lo = lo;
            have_prev = true;
        }
        if (rep.holds && !monotone) {
            rep.holds = false;
            rep.detail = "alpha_n not strictly decreasing";
        }
        if (rep.holds) rep.detail = "alpha brackets:" + alphas.str();
        reports.push_back(std::move(rep));
    }

    // pcon-c: even n, no real roots at all
    {
        const int cap = std::min(nmax, 24);
        ConjectureReport rep{"pcon-c", "even 4 <= n <= " + std::to_string(cap), true, ""};
        for (int n = 4; n <= cap; n += 2) {
            const int roots = real_roots_total(p_of(n));
            if (roots != 0) {
                rep.holds = false;
                rep.detail = "n=" + std::to_string(n) + " has " + std::to_string(roots) + " real roots";
                break;
            }
        }
        reports.push_back(std::move(rep));
    }

    // pcon-e: P_n(-1) against the closed-form generating function
    {
        const int cap = std::min(nmax, 60);
        const auto series = pn_neg1_series(cap - 2);
        ConjectureReport rep{"pcon-e", "2 <= n <= " + std::to_string(cap), true, ""};
        for (int n = 2; n <= cap; ++n) {
            const mpz_class got = p_of(n).evaluate(mpz_class(-1));
            if (got != series[static_cast<std::size_t>(n - 2)]) {
                rep.holds = false;
                rep.detail = "n=" + std::to_string(n) + ": " + got.get_str() + " vs " +
                             series[static_cast<std::size_t>(n - 2)].get_str();
                break;
            }
        }
        reports.push_back(std::move(rep));
    }

    // pcon-f: sum of |coefficients| equals P_n(-1) for even n >= 20
    {
        const int cap = std::min(nmax, 60);
        ConjectureReport rep{"pcon-f", "even 20 <= n <= " + std::to_string(cap), true, ""};
        for (int n = 20; n <= cap; n += 2) {
            const IntPoly& p = p_of(n);
            mpz_class abs_sum = 0;
            for (const auto& c : p.coeffs()) abs_sum += abs(c);
            if (abs_sum != p.evaluate(mpz_class(-1))) {
                rep.holds = false;
                rep.detail = "n=" + std::to_string(n);
                break;
            }
        }
        reports.push_back(std::move(rep));
    }

    return reports;
}

}  // namespace tatami
