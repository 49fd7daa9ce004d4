#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tatami {

// Dense univariate polynomial over arbitrary-precision integers.
// Degree of the zero polynomial is -1.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(const mpz_class& v) { return IntPoly({v}); }
    static IntPoly monomial(const mpz_class& v, int power);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpz_class& operator[](int k) const;  // 0 outside range
    const std::vector<mpz_class>& coeffs() const { return c_; }

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator*=(const mpz_class& s);
    bool operator==(const IntPoly&) const = default;

    IntPoly shifted(int m) const;  // multiply by z^m; negative m drops low terms (must be zero)
    IntPoly reciprocal() const;    // z^deg * p(1/z)
    IntPoly reciprocal(int top_degree) const;

    // In-place multiply / exact divide by (1 + z^m), both O(degree).
    IntPoly& mul_one_plus(int m);
    IntPoly& div_one_plus(int m);

    mpz_class evaluate(const mpz_class& x) const;
    mpq_class evaluate(const mpq_class& x) const;
    // Sign of p(u/v) for v > 0, via homogeneous integer evaluation.
    int sign_at(const mpq_class& x) const;

    std::string to_string() const;  // coefficient list, ascending powers

  private:
    void trim();
    std::vector<mpz_class> c_;
};

struct ExactDivideError : std::runtime_error {
    ExactDivideError(std::string msg, IntPoly rem) : std::runtime_error(std::move(msg)), remainder(std::move(rem)) {}
    IntPoly remainder;
};

// Long division p = q*d + r with deg r < deg d; requires every elimination
// step's leading coefficient to divide exactly (always true for monic d).
std::pair<IntPoly, IntPoly> divmod(const IntPoly& p, const IntPoly& d);

// Quotient of an exact division; throws ExactDivideError carrying the
// remainder when it is nonzero (a theorem check, not a crash).
IntPoly exact_divide(const IntPoly& p, const IntPoly& d);

}  // namespace tatami
