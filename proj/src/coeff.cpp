#include <rtgw/coeff.hpp>

namespace rtgw {

Coefficient Coefficient::i_pow(long long n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return Coefficient(1);
        case 1: return imag_unit();
        case 2: return Coefficient(-1);
        default: return {Rat(0), Rat(-1), Rat(0), Rat(0)};
    }
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    a_ += o.a_;
    b_ += o.b_;
    c_ += o.c_;
    d_ += o.d_;
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    c_ -= o.c_;
    d_ -= o.d_;
    return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
    // Basis products: i*i = -1, sqrt3*sqrt3 = 3, i*sqrt3 = (i sqrt3),
    // i*(i sqrt3) = -sqrt3, sqrt3*(i sqrt3) = 3i, (i sqrt3)^2 = -3.
    Rat a = a_ * o.a_ - b_ * o.b_ + 3 * c_ * o.c_ - 3 * d_ * o.d_;
    Rat b = a_ * o.b_ + b_ * o.a_ + 3 * c_ * o.d_ + 3 * d_ * o.c_;
    Rat c = a_ * o.c_ + c_ * o.a_ - b_ * o.d_ - d_ * o.b_;
    Rat d = a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_;
    a_ = std::move(a);
    b_ = std::move(b);
    c_ = std::move(c);
    d_ = std::move(d);
    return *this;
}

Coefficient Coefficient::inverse() const {
    if (is_zero()) throw MathError("division by zero in Q(i, sqrt3)");
    // Write z = A + B*i with A, B in Q(sqrt3). Then z * conj(z) = A^2 + B^2
    // lies in Q(sqrt3), say u + v*sqrt3, and (u + v*sqrt3)^-1 =
    // (u - v*sqrt3) / (u^2 - 3 v^2). The final denominator is a nonzero
    // rational because sqrt3 is irrational.
    Rat u = a_ * a_ + b_ * b_ + 3 * c_ * c_ + 3 * d_ * d_;
    Rat v = 2 * (a_ * c_ + b_ * d_);
    Rat w = u * u - 3 * v * v;
    Coefficient norm_inv{u / w, Rat(0), -v / w, Rat(0)};
    return conj() * norm_inv;
}

int Coefficient::component_count() const {
    return (a_ != 0) + (b_ != 0) + (c_ != 0) + (d_ != 0);
}

namespace {

// Appends one basis component, handling sign separators and the implicit
// coefficient 1 in front of i / sqrt3 / i*sqrt3.
void append_component(std::string& out, const Rat& value, const char* token) {
    if (value == 0) return;
    Rat mag = value < 0 ? Rat(-value) : value;
    if (out.empty()) {
        if (value < 0) out += "-";
    } else {
        out += value < 0 ? " - " : " + ";
    }
    bool unit = (mag == 1) && token[0] != '\0';
    if (!unit) out += mag.str();
    if (token[0] != '\0') {
        if (!unit) out += "*";
        out += token;
    }
}

}  // namespace

std::string Coefficient::str() const {
    if (is_zero()) return "0";
    std::string out;
    append_component(out, a_, "");
    append_component(out, b_, "i");
    append_component(out, c_, "sqrt3");
    append_component(out, d_, "i*sqrt3");
    return out;
}

}  // namespace rtgw
