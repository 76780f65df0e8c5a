#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tilingforge/quadfield.hpp"
#include "tilingforge/rational.hpp"

namespace tilingforge {

/// Integer lattice vector.
struct IntVec {
    std::int64_t x = 0, y = 0;

    IntVec operator+(IntVec o) const { return {x + o.x, y + o.y}; }
    IntVec operator-(IntVec o) const { return {x - o.x, y - o.y}; }
    IntVec operator-() const { return {-x, -y}; }
    IntVec operator*(std::int64_t k) const { return {x * k, y * k}; }
    bool operator==(const IntVec&) const = default;
};

/// Rational point of Q^2.
struct RatVec {
    Rat x{0}, y{0};

    RatVec() = default;
    RatVec(Rat xx, Rat yy) : x(std::move(xx)), y(std::move(yy)) {}
    RatVec(IntVec v) : x(make_rat(v.x)), y(make_rat(v.y)) {}

    RatVec operator+(const RatVec& o) const { return {x + o.x, y + o.y}; }
    RatVec operator-(const RatVec& o) const { return {x - o.x, y - o.y}; }
    RatVec operator-() const { return {-x, -y}; }
    bool operator==(const RatVec& o) const { return x == o.x && y == o.y; }
    bool is_integral() const { return rat_is_integer(x) && rat_is_integer(y); }
    RatVec mod1() const { return {rat_mod1(x), rat_mod1(y)}; }
    std::string str() const { return "(" + rat_str(x) + "," + rat_str(y) + ")"; }
};

struct RatVecLess {
    bool operator()(const RatVec& a, const RatVec& b) const {
        int c = cmp(a.x, b.x);
        if (c != 0) return c < 0;
        return cmp(a.y, b.y) < 0;
    }
};

/// 2x2 integer matrix [[a,b],[c,d]], unimodular in all tiling uses.
struct UniMatrix {
    std::int64_t a = 1, b = 0, c = 0, d = 1;  // m11 m12 m21 m22

    std::int64_t det() const { return a * d - b * c; }
    std::int64_t trace() const { return a + d; }

    IntVec apply(IntVec v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    RatVec apply(const RatVec& v) const { return {Rat(a) * v.x + Rat(b) * v.y, Rat(c) * v.x + Rat(d) * v.y}; }
    UniMatrix operator*(const UniMatrix& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    /// Exact inverse; requires |det| = 1.
    UniMatrix inverse() const;
    bool operator==(const UniMatrix&) const = default;
    std::string str() const;
};

/// True iff some power of M (or of -M) has all entries strictly positive.
bool check_primitive(const UniMatrix& m, int max_power = 8);

enum class Axis { V, Y };

/**
 * Exact projections of the plane onto the expanding line V (along W) and onto
 * the window axis Y (along V), both valued in Q[lambda].
 *
 * Normalization: piY(e1) = -1 (so piY(e2) = (lambda - m22)/m21 > 0), and
 * piV(e2) = 1, piV(e1) = (lambda - m22)/m12 > 0. Only ratios and orderings of
 * piV values are ever consumed downstream.
 */
class Projections {
public:
    static Projections from_matrix(const UniMatrix& m);

    const UniMatrix& matrix() const { return mat_; }
    const FieldSpec& field() const { return field_; }
    const QFNum& lambda() const { return lambda_; }
    /// Contracting eigenvalue det(M)/lambda = T - lambda.
    const QFNum& lambda_conj() const { return lambda_conj_; }

    const QFNum& piY_e1() const { return piY_[0]; }
    const QFNum& piY_e2() const { return piY_[1]; }
    const QFNum& piV_e1() const { return piV_[0]; }
    const QFNum& piV_e2() const { return piV_[1]; }

    QFNum projY(const RatVec& z) const { return piY_[0] * z.x + piY_[1] * z.y; }
    QFNum projY(IntVec z) const { return piY_[0] * make_rat(z.x) + piY_[1] * make_rat(z.y); }
    QFNum projV(const RatVec& z) const { return piV_[0] * z.x + piV_[1] * z.y; }
    QFNum projV(IntVec z) const { return piV_[0] * make_rat(z.x) + piV_[1] * make_rat(z.y); }
    QFNum project(const RatVec& z, Axis which) const {
        return which == Axis::Y ? projY(z) : projV(z);
    }

    /// Unique rational vector with the given Y-projection (piY is injective on Q^2).
    RatVec liftY(const QFNum& y) const;

private:
    UniMatrix mat_;
    FieldSpec field_;
    QFNum lambda_, lambda_conj_;
    std::array<QFNum, 2> piY_, piV_;
};

enum class Closure { LeftClosed, RightClosed };

inline Closure flip(Closure c) {
    return c == Closure::LeftClosed ? Closure::RightClosed : Closure::LeftClosed;
}

/**
 * Half-open window [t, t+l) (or (t, t+l]) on the Y axis, held as rational
 * vectors. Normalized so piY(l) > 0.
 */
struct WindowSpec {
    RatVec l, t;
    Closure closure = Closure::LeftClosed;

    static WindowSpec make(const Projections& proj, RatVec l, RatVec t = {},
                           Closure closure = Closure::LeftClosed);

    QFNum lo(const Projections& proj) const { return proj.projY(t); }
    QFNum hi(const Projections& proj) const { return proj.projY(t) + proj.projY(l); }
    QFNum length(const Projections& proj) const { return proj.projY(l); }
    bool contains(const Projections& proj, const QFNum& y) const;
};

/**
 * The two staircase steps: u has piY > 0, d has piY < 0, both minimal piV > 0
 * on their side of the window strip. has_middle == (|piY(u)|+|piY(d)| > |window|),
 * in which case u+d occurs as the third (longest) step.
 *
 * Paper labels: a = d, b = u, c = u + d.
 */
struct StepSet {
    IntVec u, d;
    bool has_middle = false;

    IntVec step_a() const { return d; }
    IntVec step_b() const { return u; }
    IntVec step_c() const { return u + d; }
};

StepSet compute_steps(const Projections& proj, const WindowSpec& w);

/// Lattice vector with minimal positive piV among those with piY in (0,L) (side=+1)
/// or (-L,0) (side=-1). Exact continued-fraction walk on the Klein sail.
IntVec minimal_step(const Projections& proj, const QFNum& window_len, int side);

}  // namespace tilingforge
