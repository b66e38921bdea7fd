#pragma once
// Exact scalars for the kernel: the number field Q(i, sqrt(3)).
// A value is a + b*i + c*sqrt(3) + d*i*sqrt(3) with arbitrary-precision
// rational components. All arithmetic is exact; there is no floating point.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace rtgw {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Raised when a value has no inverse or an operation is undefined.
struct MathError : std::runtime_error {
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed input: bad expression text, bad datum fields, shapes
// that fall outside the supported forms.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

class Coefficient {
public:
    Coefficient() = default;
    Coefficient(long long n) : a_(n) {}
    explicit Coefficient(Rat a) : a_(std::move(a)) {}
    Coefficient(Rat a, Rat b, Rat c, Rat d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static Coefficient imag_unit() { return {Rat(0), Rat(1), Rat(0), Rat(0)}; }
    static Coefficient sqrt3() { return {Rat(0), Rat(0), Rat(1), Rat(0)}; }
    // i^n for any integer n (n may be negative).
    static Coefficient i_pow(long long n);

    const Rat& rat_part() const { return a_; }
    const Rat& i_part() const { return b_; }
    const Rat& sqrt3_part() const { return c_; }
    const Rat& i_sqrt3_part() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 0; }
    // True when the value lies in Q (no i and no sqrt(3) component).
    bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }

    Coefficient conj() const { return {a_, -b_, c_, -d_}; }
    Coefficient inverse() const;

    Coefficient operator-() const { return {-a_, -b_, -c_, -d_}; }
    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);
    Coefficient& operator/=(const Coefficient& o) { return *this *= o.inverse(); }

    friend Coefficient operator+(Coefficient x, const Coefficient& y) { return x += y; }
    friend Coefficient operator-(Coefficient x, const Coefficient& y) { return x -= y; }
    friend Coefficient operator*(Coefficient x, const Coefficient& y) { return x *= y; }
    friend Coefficient operator/(Coefficient x, const Coefficient& y) { return x /= y; }
    friend bool operator==(const Coefficient& x, const Coefficient& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Coefficient& x, const Coefficient& y) { return !(x == y); }

    // Canonical text form, e.g. "1 - 2*i + 3*sqrt3 + i*sqrt3". Deterministic
    // across runs; the expression parser accepts everything this emits.
    std::string str() const;

    // Number of nonzero basis components; renderers parenthesize when > 1.
    int component_count() const;

private:
    Rat a_{0}, b_{0}, c_{0}, d_{0};
};

}  // namespace rtgw
