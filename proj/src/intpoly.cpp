#include "tatami/intpoly.hpp"

#include <sstream>

namespace tatami {

namespace {
const mpz_class kZero = 0;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(const mpz_class& v, int power) {
    if (power < 0) throw std::domain_error("negative power");
    std::vector<mpz_class> c(static_cast<std::size_t>(power) + 1);
    c.back() = v;
    return IntPoly(std::move(c));
}

const mpz_class& IntPoly::operator[](int k) const {
    if (k < 0 || k > degree()) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t t = 0; t < o.c_.size(); ++t) c_[t] += o.c_[t];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t t = 0; t < o.c_.size(); ++t) c_[t] -= o.c_[t];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t s = 0; s < a.c_.size(); ++s) {
        if (a.c_[s] == 0) continue;
        for (std::size_t t = 0; t < b.c_.size(); ++t) {
            if (b.c_[t] == 0) continue;
            mpz_addmul(out[s + t].get_mpz_t(), a.c_[s].get_mpz_t(), b.c_[t].get_mpz_t());
        }
    }
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const mpz_class& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

IntPoly IntPoly::shifted(int m) const {
    if (is_zero()) return {};
    if (m >= 0) {
        std::vector<mpz_class> out(static_cast<std::size_t>(m));
        out.insert(out.end(), c_.begin(), c_.end());
        return IntPoly(std::move(out));
    }
    const int drop = -m;
    if (drop > degree()) throw std::domain_error("shift drops nonzero terms");
    for (int t = 0; t < drop; ++t)
        if (c_[static_cast<std::size_t>(t)] != 0) throw std::domain_error("shift drops nonzero terms");
    return IntPoly(std::vector<mpz_class>(c_.begin() + drop, c_.end()));
}

IntPoly IntPoly::reciprocal() const { return reciprocal(degree()); }

IntPoly IntPoly::reciprocal(int top_degree) const {
    if (is_zero()) return {};
    if (top_degree < degree()) throw std::domain_error("reciprocal top degree below degree");
    std::vector<mpz_class> out(static_cast<std::size_t>(top_degree) + 1);
    for (int t = 0; t <= degree(); ++t) out[static_cast<std::size_t>(top_degree - t)] = c_[static_cast<std::size_t>(t)];
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::mul_one_plus(int m) {
    if (m <= 0) throw std::domain_error("mul_one_plus requires m >= 1");
    if (is_zero()) return *this;
    c_.resize(c_.size() + static_cast<std::size_t>(m));
    for (int t = degree(); t >= m; --t) c_[static_cast<std::size_t>(t)] += c_[static_cast<std::size_t>(t - m)];
    trim();
    return *this;
}

IntPoly& IntPoly::div_one_plus(int m) {
    if (m <= 0) throw std::domain_error("div_one_plus requires m >= 1");
    if (is_zero()) return *this;
    if (degree() < m) throw std::domain_error("not divisible by 1+z^m");
    // q_t = p_t - q_{t-m}; the top m slots of q must reproduce p's top.
    std::vector<mpz_class> q(c_.size() - static_cast<std::size_t>(m));
    for (std::size_t t = 0; t < q.size(); ++t) {
        q[t] = c_[t];
        if (t >= static_cast<std::size_t>(m)) q[t] -= q[t - static_cast<std::size_t>(m)];
    }
    for (std::size_t t = q.size(); t < c_.size(); ++t) {
        const std::size_t qs = t - static_cast<std::size_t>(m);
        if (qs >= q.size() ? c_[t] != 0 : q[qs] != c_[t]) throw std::domain_error("not divisible by 1+z^m");
    }
    c_ = std::move(q);
    trim();
    return *this;
}

mpz_class IntPoly::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (int t = degree(); t >= 0; --t) {
        acc *= x;
        acc += c_[static_cast<std::size_t>(t)];
    }
    return acc;
}

mpq_class IntPoly::evaluate(const mpq_class& x) const {
    mpq_class acc = 0;
    for (int t = degree(); t >= 0; --t) {
        acc *= x;
        acc += c_[static_cast<std::size_t>(t)];
    }
    return acc;
}

int IntPoly::sign_at(const mpq_class& x) const {
    if (is_zero()) return 0;
    const mpz_class u = x.get_num();
    const mpz_class v = x.get_den();  // > 0 canonically
    mpz_class acc = 0;
    mpz_class vp = 1;
    // sum c_t * u^t * v^(deg-t), Horner in u with a running power of v
    for (int t = degree(); t >= 0; --t) {
        acc *= u;
        acc += c_[static_cast<std::size_t>(t)] * vp;
        if (t > 0) vp *= v;
    }
    return sgn(acc);
}

std::string IntPoly::to_string() const {
    std::ostringstream out;
    for (int t = 0; t <= degree(); ++t) {
        if (t) out << ' ';
        out << c_[static_cast<std::size_t>(t)].get_str();
    }
    if (is_zero()) out << '0';
    return out.str();
}

std::pair<IntPoly, IntPoly> divmod(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (p.degree() < d.degree()) return {IntPoly{}, p};
    std::vector<mpz_class> rem(p.coeffs());
    const int dd = d.degree();
    const mpz_class& lead = d[dd];
    std::vector<mpz_class> q(static_cast<std::size_t>(p.degree() - dd) + 1);
    for (int t = p.degree(); t >= dd; --t) {
        mpz_class& top = rem[static_cast<std::size_t>(t)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw ExactDivideError("non-integral quotient step at degree " + std::to_string(t), IntPoly(rem));
        mpz_class f = top / lead;
        for (int s = 0; s <= dd; ++s)
            mpz_submul(rem[static_cast<std::size_t>(t - dd + s)].get_mpz_t(), f.get_mpz_t(), d[s].get_mpz_t());
        q[static_cast<std::size_t>(t - dd)] = std::move(f);
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(rem))};
}

IntPoly exact_divide(const IntPoly& p, const IntPoly& d) {
    auto [q, r] = divmod(p, d);
    if (!r.is_zero()) throw ExactDivideError("nonzero remainder: " + r.to_string(), std::move(r));
    return q;
}

}  // namespace tatami
