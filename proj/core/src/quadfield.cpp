#include "tilingforge/quadfield.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace tilingforge {

FieldSpec make_field(std::int64_t trace, std::int64_t det) {
    if (det != 1 && det != -1) throw InputError("field determinant must be +-1");
    std::int64_t disc = trace * trace - 4 * det;
    if (disc <= 0) throw InputError("field discriminant must be positive");
    mpz_class d(disc);
    if (mpz_perfect_square_p(d.get_mpz_t()))
        throw InputError("square discriminant: eigenvalues rational, tiling periodic");
    return FieldSpec{trace, det};
}

void QFNum::check_field(const QFNum& o) const {
    if (!(fld_ == o.fld_)) throw InputError("mixed quadratic fields in arithmetic");
}

QFNum QFNum::operator+(const QFNum& o) const {
    check_field(o);
    return QFNum(p_ + o.p_, q_ + o.q_, fld_);
}

QFNum QFNum::operator-(const QFNum& o) const {
    check_field(o);
    return QFNum(p_ - o.p_, q_ - o.q_, fld_);
}

QFNum QFNum::operator-() const { return QFNum(-p_, -q_, fld_); }

QFNum QFNum::operator*(const QFNum& o) const {
    check_field(o);
    // lambda^2 = T*lambda - D
    Rat T(fld_.trace), D(fld_.det);
    Rat qq = q_ * o.q_;
    return QFNum(p_ * o.p_ - D * qq, p_ * o.q_ + q_ * o.p_ + T * qq, fld_);
}

QFNum QFNum::conjugate() const {
    Rat T(fld_.trace);
    return QFNum(p_ + q_ * T, -q_, fld_);
}

Rat QFNum::norm() const {
    Rat T(fld_.trace), D(fld_.det);
    Rat n = p_ * p_ + T * p_ * q_ + D * q_ * q_;
    n.canonicalize();
    return n;
}

QFNum QFNum::operator/(const QFNum& o) const {
    check_field(o);
    if (o.is_zero()) throw InputError("division by zero in Q[lambda]");
    Rat n = o.norm();
    QFNum num = *this * o.conjugate();
    return QFNum(num.p_ / n, num.q_ / n, fld_);
}

QFNum QFNum::operator*(const Rat& r) const { return QFNum(p_ * r, q_ * r, fld_); }

QFNum QFNum::operator/(const Rat& r) const {
    if (r == 0) throw InputError("division by zero rational");
    return QFNum(p_ / r, q_ / r, fld_);
}

bool QFNum::operator==(const QFNum& o) const {
    check_field(o);
    return p_ == o.p_ && q_ == o.q_;
}

int QFNum::sign() const {
    if (q_ == 0) return sgn(p_);
    // x = p + q*lambda with lambda = (T + s*sqrt(Disc))/2, s chosen so lambda
    // is the larger-|.| root. 2x = (2p + qT) + s*q*sqrt(Disc) =: A + B*sqrt(Disc).
    int root_sign = fld_.trace >= 0 ? 1 : -1;
    Rat A = 2 * p_ + Rat(fld_.trace) * q_;
    Rat B = root_sign > 0 ? q_ : Rat(-q_);
    int sa = sgn(A), sb = sgn(B);
    if (sa >= 0 && sb >= 0) return (sa == 0 && sb == 0) ? 0 : 1;
    if (sa <= 0 && sb <= 0) return -1;
    // Opposite signs: compare A^2 with B^2 * Disc.
    Rat lhs = A * A, rhs = B * B * Rat(fld_.discriminant());
    int c = cmp(lhs, rhs);
    if (c == 0) throw InternalError("sqrt(Disc) rational despite non-square check");
    if (sa > 0) return c > 0 ? 1 : -1;  // A > 0 > B
    return c > 0 ? -1 : 1;              // B > 0 > A
}

mpz_class QFNum::floor() const {
    if (q_ == 0) return rat_floor(p_);
    // Rational enclosure of sqrt(Disc) via integer sqrt at growing precision.
    mpz_class disc(static_cast<long>(fld_.discriminant()));
    for (unsigned bits = 32;; bits *= 2) {
        mpz_class scaled = disc << (2 * bits);
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
        mpz_class denom = mpz_class(1) << bits;
        Rat lo(root, denom), hi(root + 1, denom);
        lo.canonicalize();
        hi.canonicalize();
        // lambda in [l_lo, l_hi]
        Rat T(fld_.trace);
        Rat l_lo, l_hi;
        if (fld_.trace >= 0) {
            l_lo = (T + lo) / 2;
            l_hi = (T + hi) / 2;
        } else {
            l_lo = (T - hi) / 2;
            l_hi = (T - lo) / 2;
        }
        Rat x_lo, x_hi;
        if (q_ > 0) {
            x_lo = p_ + q_ * l_lo;
            x_hi = p_ + q_ * l_hi;
        } else {
            x_lo = p_ + q_ * l_hi;
            x_hi = p_ + q_ * l_lo;
        }
        mpz_class f_lo = rat_floor(x_lo), f_hi = rat_floor(x_hi);
        if (f_lo == f_hi) return f_lo;
        // x irrational: the enclosure eventually separates it from the integer.
    }
}

double QFNum::to_double() const {
    double disc_rt = std::sqrt(static_cast<double>(fld_.discriminant()));
    double l = (static_cast<double>(fld_.trace) + (fld_.trace >= 0 ? disc_rt : -disc_rt)) / 2.0;
    return p_.get_d() + q_.get_d() * l;
}

std::string QFNum::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QFNum& x) {
    os << rat_str(x.p());
    if (x.q() != 0) {
        if (x.q() > 0) os << "+";
        os << rat_str(x.q()) << "L";
    }
    return os;
}

QFNum qf_arith(const QFNum& x, const QFNum& y, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return x + y;
        case ArithOp::Sub: return x - y;
        case ArithOp::Mul: return x * y;
        case ArithOp::Div: return x / y;
        case ArithOp::Neg: return -x;
    }
    throw InputError("unknown arithmetic op");
}

}  // namespace tilingforge
