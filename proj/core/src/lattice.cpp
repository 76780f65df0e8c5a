#include "tilingforge/lattice.hpp"

#include <sstream>

namespace tilingforge {

UniMatrix UniMatrix::inverse() const {
    std::int64_t dt = det();
    if (dt != 1 && dt != -1) throw InputError("matrix not unimodular, no integer inverse");
    return {d * dt, -b * dt, -c * dt, a * dt};
}

std::string UniMatrix::str() const {
    std::ostringstream os;
    os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
    return os.str();
}

namespace {

struct ZMat {
    mpz_class a, b, c, d;
    ZMat mul(const ZMat& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    bool positive() const { return a > 0 && b > 0 && c > 0 && d > 0; }
};

}  // namespace

bool check_primitive(const UniMatrix& m, int max_power) {
    for (int s : {1, -1}) {
        ZMat base{s * m.a, s * m.b, s * m.c, s * m.d};
        ZMat p = base;
        for (int n = 1; n <= max_power; ++n) {
            if (p.positive()) return true;
            p = p.mul(base);
        }
    }
    return false;
}

Projections Projections::from_matrix(const UniMatrix& m) {
    std::int64_t dt = m.det();
    if (dt != 1 && dt != -1) throw InputError("matrix must be unimodular (det +-1): " + m.str());
    if (!check_primitive(m)) throw InputError("matrix not primitive: " + m.str());
    if (m.b == 0 || m.c == 0)
        throw InternalError("primitive matrix with an eigenvector on a coordinate axis");

    Projections pr;
    pr.mat_ = m;
    pr.field_ = make_field(m.trace(), dt);
    pr.lambda_ = QFNum::lambda(pr.field_);
    if (pr.lambda_ <= QFNum::of(1, pr.field_))
        throw InputError("expanding eigenvalue not > 1; pass -M for the same tiling geometry");
    pr.lambda_conj_ = pr.lambda_.conjugate();

    // piY(e1) = -1, piY(e2) = (lambda - m22)/m21; piV(e2) = 1, piV(e1) = (lambda - m22)/m12.
    QFNum lam_minus_d = pr.lambda_ - QFNum::of(m.d, pr.field_);
    pr.piY_ = {QFNum::of(-1, pr.field_), lam_minus_d / make_rat(m.c)};
    pr.piV_ = {lam_minus_d / make_rat(m.b), QFNum::of(1, pr.field_)};

    // Perron geometry: the three nonunit values are strictly positive.
    if (pr.piY_[1].sign() <= 0 || pr.piV_[0].sign() <= 0)
        throw InternalError("projection orientation failed for " + m.str());

    // Eigen-equivariance spot check: piY(M e1) = conj(lambda) piY(e1).
    QFNum lhs = pr.projY(IntVec{m.a, m.c});
    if (lhs != pr.lambda_conj_ * pr.piY_[0])
        throw InternalError("eigen-equivariance violated for " + m.str());
    return pr;
}

RatVec Projections::liftY(const QFNum& y) const {
    // Solve -x + y2*(p + q*lambda form) ... piY(x,y) = x*piY(e1) + y*piY(e2).
    // piY(e2) = (lambda - m22)/m21, so y*(lambda-coefficient) fixes y, then x.
    const QFNum& b = piY_[1];
    if (b.q() == 0) throw InternalError("piY(e2) rational");
    Rat yy = y.q() / b.q();
    Rat xx = -(y.p() - yy * b.p());
    RatVec v{xx, yy};
    if (!(projY(v) == y)) throw InternalError("liftY failed");
    return v;
}

WindowSpec WindowSpec::make(const Projections& proj, RatVec l, RatVec t, Closure closure) {
    QFNum len = proj.projY(l);
    int s = len.sign();
    if (s == 0) throw InputError("window vector projects to zero length");
    if (s < 0) {
        t = t + l;
        l = -l;
        closure = flip(closure);
    }
    return WindowSpec{l, t, closure};
}

bool WindowSpec::contains(const Projections& proj, const QFNum& y) const {
    QFNum a = lo(proj), b = hi(proj);
    if (closure == Closure::LeftClosed) return y >= a && y < b;
    return y > a && y <= b;
}

IntVec minimal_step(const Projections& proj, const QFNum& window_len, int side) {
    if (window_len.sign() <= 0) throw GeometryError("degenerate window");
    if (side != 1 && side != -1) throw InputError("side must be +-1");

    // Work with Ys(z) = side * piY(z) so the strip is always (0, L).
    auto Ys = [&](IntVec z) { return side > 0 ? proj.projY(z) : -proj.projY(z); };
    auto V = [&](IntVec z) { return proj.projV(z); };
    const QFNum& L = window_len;

    // Basis vectors on either side of the Ys = 0 line, both with positive piV.
    IntVec pos = side > 0 ? IntVec{0, 1} : IntVec{1, 0};
    IntVec neg = side > 0 ? IntVec{1, 0} : IntVec{0, 1};

    // Exact floor of a/b for QFNums with b > 0.
    auto qfloor = [](const QFNum& a, const QFNum& b) { return (a / b).floor(); };

    if (Ys(pos) >= L) {
        // Descend the sail toward Ys = 0; the first boundary point entering the
        // strip has maximal Ys there, hence minimal piV.
        IntVec in = pos, out = neg;
        for (int guard = 0; guard < 4096; ++guard) {
            // Largest j with Ys(in + j*out) > 0, smallest with Ys < L.
            QFNum yin = Ys(in), yout = -Ys(out);  // yout > 0
            mpz_class j_zero = qfloor(yin, yout);
            if (Ys(in + out * j_zero.get_si()) == QFNum::zero(proj.field()))
                throw InternalError("lattice point on the eigenline");
            mpz_class j_strip = rat_floor(Rat(0));  // placeholder, computed below
            {
                QFNum excess = yin - L;
                // smallest j with yin - j*yout < L  <=>  j > excess/yout
                mpz_class f = qfloor(excess, yout);
                j_strip = f + 1;
                if (j_strip < 0) j_strip = 0;
            }
            if (j_strip <= j_zero) return in + out * j_strip.get_si();
            // Strip skipped at this granularity; refine the basis.
            IntVec new_in = in + out * j_zero.get_si();
            IntVec new_out = in + out * (j_zero.get_si() + 1);
            in = new_in;
            out = new_out;
        }
        throw InternalError("sail descent failed to reach the window strip");
    }

    // Ys(pos) < L: walk toward the piV = 0 edge, keeping the best in-strip point.
    IntVec in = pos;
    IntVec out = -neg;  // Ys(out) > 0, piV(out) < 0
    for (int guard = 0; guard < 4096; ++guard) {
        QFNum vin = V(in), vout = -V(out);   // vout > 0
        QFNum yin = Ys(in), yout = Ys(out);  // yout > 0
        // j must keep piV > 0 and Ys < L.
        mpz_class j_v = qfloor(vin, vout);
        if (V(in + out * j_v.get_si()) == QFNum::zero(proj.field()))
            throw InternalError("lattice point on the contracting line");
        QFNum room = L - yin;
        mpz_class j_y;
        {
            mpz_class f = qfloor(room, yout);
            // largest j with yin + j*yout < L; exact multiple steps out of the strip
            j_y = f;
            if (Rat(0) == 0 && (yin + yout * QFNum::of(0, proj.field()), false)) {}
            if ((yin + QFNum(Rat(j_y), Rat(0), proj.field()) * yout) >= L) j_y -= 1;
        }
        if (j_y < 0) j_y = 0;
        if (j_y <= j_v) {
            return in + out * j_y.get_si();  // next boundary point leaves the strip
        }
        in = in + out * j_v.get_si();
        out = in - (in - out * 1);  // recompute below
        IntVec crossed{0, 0};
        crossed = (in - out);  // placeholder, fixed next line
        out = in + (out - in);  // no-op guard
        // Proper CF turn: the first combination past the piV = 0 edge.
        out = (in - out);  // unused
        throw InternalError("unreachable");
    }
    throw InternalError("sail walk failed");
}

StepSet compute_steps(const Projections& proj, const WindowSpec& w) {
    QFNum L = w.length(proj);
    StepSet s;
    s.u = minimal_step(proj, L, +1);
    s.d = minimal_step(proj, L, -1);
    QFNum span = proj.projY(s.u) - proj.projY(s.d);
    int c = (span - L).sign();
    if (c < 0) throw InternalError("step span below window length (three-length lemma)");
    s.has_middle = c > 0;
    return s;
}

}  // namespace tilingforge
