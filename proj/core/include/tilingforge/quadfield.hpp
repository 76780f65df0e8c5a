#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "tilingforge/rational.hpp"

namespace tilingforge {

/**
 * Real quadratic field Q[lambda], lambda the root of x^2 - T x + D of larger
 * absolute value (the expanding eigenvalue of the generating matrix).
 * D is restricted to +-1, so lambda is a quadratic unit and its conjugate
 * T - lambda = D/lambda is the contracting eigenvalue.
 */
struct FieldSpec {
    std::int64_t trace = 1;  // T
    std::int64_t det = -1;   // D

    std::int64_t discriminant() const { return trace * trace - 4 * det; }

    bool operator==(const FieldSpec&) const = default;
};

// Validates T^2-4D > 0 and non-square (distinct irrational roots), |D| = 1.
FieldSpec make_field(std::int64_t trace, std::int64_t det);

/// Element p + q*lambda of Q[lambda].
class QFNum {
public:
    QFNum() = default;
    QFNum(Rat p, Rat q, FieldSpec field) : p_(std::move(p)), q_(std::move(q)), fld_(field) {}

    static QFNum of(const Rat& p, FieldSpec f) { return QFNum(p, Rat(0), f); }
    static QFNum of(long p, FieldSpec f) { return QFNum(make_rat(p), Rat(0), f); }
    static QFNum lambda(FieldSpec f) { return QFNum(Rat(0), Rat(1), f); }
    static QFNum zero(FieldSpec f) { return QFNum(Rat(0), Rat(0), f); }

    const Rat& p() const { return p_; }
    const Rat& q() const { return q_; }
    const FieldSpec& field() const { return fld_; }

    bool is_rational() const { return q_ == 0; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }
    // Membership in Z[lambda].
    bool is_integral() const { return rat_is_integer(p_) && rat_is_integer(q_); }

    QFNum operator+(const QFNum& o) const;
    QFNum operator-(const QFNum& o) const;
    QFNum operator-() const;
    QFNum operator*(const QFNum& o) const;
    QFNum operator/(const QFNum& o) const;
    QFNum& operator+=(const QFNum& o) { return *this = *this + o; }
    QFNum& operator-=(const QFNum& o) { return *this = *this - o; }

    QFNum operator*(const Rat& r) const;
    QFNum operator/(const Rat& r) const;

    /// Galois conjugate p + q(T - lambda).
    QFNum conjugate() const;

    /// Field norm (p + q*lambda)(p + q*conj(lambda)) as a rational.
    Rat norm() const;

    /// Exact sign of the real value, decided algebraically (never floating point).
    int sign() const;

    /// Exact floor of the real value.
    mpz_class floor() const;

    bool operator==(const QFNum& o) const;
    bool operator!=(const QFNum& o) const { return !(*this == o); }
    bool operator<(const QFNum& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QFNum& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const QFNum& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const QFNum& o) const { return (*this - o).sign() >= 0; }

    double to_double() const;  // rendering only
    std::string str() const;

private:
    void check_field(const QFNum& o) const;

    Rat p_{0}, q_{0};
    FieldSpec fld_;
};

std::ostream& operator<<(std::ostream& os, const QFNum& x);

enum class ArithOp { Add, Sub, Mul, Div, Neg };

/// Dispatcher form of field arithmetic, mirrors the batch interfaces.
QFNum qf_arith(const QFNum& x, const QFNum& y, ArithOp op);

inline int qf_sign(const QFNum& x) { return x.sign(); }
inline bool qf_is_integral(const QFNum& x) { return x.is_integral(); }
inline QFNum qf_conjugate(const QFNum& x) { return x.conjugate(); }

}  // namespace tilingforge
