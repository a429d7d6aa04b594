#include "onebit/pade.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "onebit/special.hpp"

namespace onebit {

using special::kPi;

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// n-th central difference estimate of f^(n)(x0) at step h, n <= 4
double central_derivative(const std::function<double(double)>& f, double f0,
                          double x0, int n, double h) {
    const double f1 = f(x0 + h), fm1 = f(x0 - h);
    switch (n) {
        case 1:
            return (f1 - fm1) / (2.0 * h);
        case 2:
            return (f1 - 2.0 * f0 + fm1) / (h * h);
        case 3: {
            const double f2 = f(x0 + 2.0 * h), fm2 = f(x0 - 2.0 * h);
            return (f2 - 2.0 * f1 + 2.0 * fm1 - fm2) / (2.0 * h * h * h);
        }
        case 4: {
            const double f2 = f(x0 + 2.0 * h), fm2 = f(x0 - 2.0 * h);
            return (f2 - 4.0 * f1 + 6.0 * f0 - 4.0 * fm1 + fm2) / (h * h * h * h);
        }
        default:
            throw std::invalid_argument("taylor_coeffs: order must be <= 4");
    }
}

// Dense solve with partial pivoting; A is row-major n x n. Returns x.
std::vector<double> solve_dense(std::vector<double> A, std::vector<double> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(A[r * n + col]) > std::abs(A[piv * n + col])) piv = r;
        if (A[piv * n + col] == 0.0)
            throw std::runtime_error("Pade degeneracy: Hankel matrix is singular");
        if (piv != col) {
            for (int k = 0; k < n; ++k) std::swap(A[col * n + k], A[piv * n + k]);
            std::swap(b[col], b[piv]);
        }
        for (int r = col + 1; r < n; ++r) {
            const double m = A[r * n + col] / A[col * n + col];
            for (int k = col; k < n; ++k) A[r * n + k] -= m * A[col * n + k];
            b[r] -= m * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int k = r + 1; k < n; ++k) s -= A[r * n + k] * x[k];
        x[r] = s / A[r * n + r];
    }
    return x;
}

double one_norm(const std::vector<double>& A, int n) {
    double best = 0.0;
    for (int c = 0; c < n; ++c) {
        double s = 0.0;
        for (int r = 0; r < n; ++r) s += std::abs(A[r * n + c]);
        best = std::max(best, s);
    }
    return best;
}

double condition_estimate(const std::vector<double>& A, int n) {
    // 1-norm condition via explicit inverse; the systems here are tiny.
    std::vector<double> inv(n * n, 0.0);
    for (int c = 0; c < n; ++c) {
        std::vector<double> e(n, 0.0);
        e[c] = 1.0;
        std::vector<double> x = solve_dense(A, std::move(e));
        for (int r = 0; r < n; ++r) inv[r * n + c] = x[r];
    }
    return one_norm(A, n) * one_norm(inv, n);
}

// integral of (a0 + a1 u + a2 u^2) / (b0 + b1 u + b2 u^2) du over [u1, u2];
// assumes the denominator is root-free on the interval.
double rational_integral(double a0, double a1, double a2, double b0, double b1,
                         double b2, double u1, double u2) {
    double total = 0.0;
    if (b2 != 0.0 && a2 != 0.0) {
        total += a2 / b2 * (u2 - u1);
        a0 -= a2 * b0 / b2;
        a1 -= a2 * b1 / b2;
        a2 = 0.0;
    }
    if (b2 == 0.0) {
        if (b1 == 0.0)
            return total + (a0 * (u2 - u1) + 0.5 * a1 * (u2 * u2 - u1 * u1) +
                            a2 * (u2 * u2 * u2 - u1 * u1 * u1) / 3.0) /
                               b0;
        return total + a1 / b1 * (u2 - u1) +
               (a0 * b1 - a1 * b0) / (b1 * b1) *
                   std::log(std::abs((b0 + b1 * u2) / (b0 + b1 * u1)));
    }
    const auto den = [&](double u) { return b0 + u * (b1 + u * b2); };
    total += a1 / (2.0 * b2) * std::log(std::abs(den(u2) / den(u1)));
    const double c = a0 - a1 * b1 / (2.0 * b2);
    const double disc = b1 * b1 - 4.0 * b0 * b2;  // = -(4 b2 b0 - b1^2)
    if (disc < 0.0) {
        const double s = std::sqrt(-disc);
        total += c * 2.0 / s *
                 (std::atan((2.0 * b2 * u2 + b1) / s) -
                  std::atan((2.0 * b2 * u1 + b1) / s));
    } else if (disc > 0.0) {
        const double s = std::sqrt(disc);
        const auto branch = [&](double u) {
            return std::log(std::abs((2.0 * b2 * u + b1 - s) / (2.0 * b2 * u + b1 + s)));
        };
        total += c / s * (branch(u2) - branch(u1));
    } else {
        total += c * (2.0 / (2.0 * b2 * u1 + b1) - 2.0 / (2.0 * b2 * u2 + b1));
    }
    return total;
}

double coeff(const std::vector<double>& v, std::size_t i) {
    return i < v.size() ? v[i] : 0.0;
}

struct PieceSpec {
    double x0, lo, hi;
    int L, M;
};

constexpr double kPi8 = kPi / 8.0;
const PieceSpec kPieces[3] = {
    {0.0, 0.0, kPi8, 1, 2},
    {kPi / 4.0, kPi8, 3.0 * kPi8, 2, 2},
    {kPi / 2.0, 3.0 * kPi8, 4.0 * kPi8, 1, 2},
};

double integrate_rational(const PadeApproximant& ap, double u1, double u2) {
    return rational_integral(coeff(ap.num, 0), coeff(ap.num, 1), coeff(ap.num, 2),
                             coeff(ap.den, 0), coeff(ap.den, 1), coeff(ap.den, 2),
                             u1, u2);
}

// fixed-rule numeric integral used when a piece is flagged degenerate
double integrate_fixed(const std::function<double(double)>& f, double a, double b) {
    static const special::GaussLegendreRule g32 = special::legendre_nodes_weights(32);
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    double sum = 0.0;
    for (int i = 0; i < g32.n; ++i)
        sum += g32.weights[i] * f(mid + half * g32.nodes[i]);
    return half * sum;
}

}  // namespace

std::vector<double> taylor_coeffs(const std::function<double(double)>& f,
                                  double x0, int order, double h0) {
    if (order < 0 || order > 4)
        throw std::invalid_argument("taylor_coeffs: order must be in [0, 4]");
    const double f0 = f(x0);
    if (!std::isfinite(f0))
        throw std::domain_error("taylor_coeffs: non-finite evaluation at x0");
    std::vector<double> c{f0};
    for (int n = 1; n <= order; ++n) {
        double t[3];
        int k = 0;
        for (const double h : {4.0 * h0, 2.0 * h0, h0})
            t[k++] = central_derivative(f, f0, x0, n, h);
        const double r0 = (4.0 * t[1] - t[0]) / 3.0;
        const double r1 = (4.0 * t[2] - t[1]) / 3.0;
        const double d_n = (16.0 * r1 - r0) / 15.0;
        if (!std::isfinite(d_n))
            throw std::domain_error("taylor_coeffs: non-finite evaluation near x0");
        c.push_back(d_n / factorial(n));
    }
    return c;
}

double PadeApproximant::eval_local(double u) const {
    double n = 0.0;
    for (std::size_t i = num.size(); i-- > 0;) n = n * u + num[i];
    double d = 0.0;
    for (std::size_t i = den.size(); i-- > 0;) d = d * u + den[i];
    return n / d;
}

bool PadeApproximant::denominator_root_in(double u_lo, double u_hi) const {
    const double b0 = coeff(den, 0), b1 = coeff(den, 1), b2 = coeff(den, 2);
    if (b2 == 0.0) {
        if (b1 == 0.0) return b0 == 0.0;
        const double r = -b0 / b1;
        return r >= u_lo && r <= u_hi;
    }
    const double disc = b1 * b1 - 4.0 * b0 * b2;
    if (disc < 0.0) return false;
    const double s = std::sqrt(disc);
    for (const double r : {(-b1 - s) / (2.0 * b2), (-b1 + s) / (2.0 * b2)})
        if (r >= u_lo && r <= u_hi) return true;
    return false;
}

PadeApproximant pade_from_taylor(const std::vector<double>& c, int L, int M,
                                 double expansion_point) {
    if (static_cast<int>(c.size()) != L + M + 1)
        throw std::invalid_argument("pade_from_taylor: need L + M + 1 coefficients");
    PadeApproximant ap;
    ap.expansion_point = expansion_point;

    double tail = 0.0;
    for (std::size_t i = 1; i < c.size(); ++i) tail = std::max(tail, std::abs(c[i]));
    if (tail <= 1e-14 * std::max(1.0, std::abs(c[0]))) {
        ap.num = {c[0]};
        ap.den = {1.0};
        return ap;
    }

    // Hankel system for the denominator: rows j = L+1..L+M of
    // sum_{i=0}^{M} b_i c_{j-i} = 0 with b_0 = 1 and c_k = 0 for k < 0.
    std::vector<double> A(M * M, 0.0), rhs(M, 0.0);
    for (int r = 0; r < M; ++r) {
        const int j = L + 1 + r;
        for (int i = 1; i <= M; ++i)
            A[r * M + (i - 1)] = (j - i >= 0) ? c[j - i] : 0.0;
        rhs[r] = -c[j];
    }
    if (condition_estimate(A, M) > 1e12)
        throw std::runtime_error(
            "Pade degeneracy: Hankel matrix ill-conditioned (non-zero determinant required)");
    const std::vector<double> b = solve_dense(A, rhs);  // b_1..b_M

    ap.den.assign(M + 1, 0.0);
    ap.den[0] = 1.0;
    for (int i = 1; i <= M; ++i) ap.den[i] = b[i - 1];

    // backsubstitution: a_j = c_j + sum_{i=1}^{min(M,j)} b_i c_{j-i}
    ap.num.assign(L + 1, 0.0);
    for (int j = 0; j <= L; ++j) {
        double a = c[j];
        for (int i = 1; i <= std::min(M, j); ++i) a += ap.den[i] * c[j - i];
        ap.num[j] = a;
    }
    return ap;
}

double integrate_outer(const PadeApproximant& ap, OuterInterval interval) {
    const PieceSpec& s = interval == OuterInterval::low ? kPieces[0] : kPieces[2];
    return integrate_rational(ap, s.lo - ap.expansion_point, s.hi - ap.expansion_point);
}

double integrate_middle(const PadeApproximant& ap) {
    return integrate_rational(ap, kPieces[1].lo - ap.expansion_point,
                              kPieces[1].hi - ap.expansion_point);
}

PiecewiseModel build_piecewise(const LagParams& p, double d, bool use_q_bar) {
    check_feasible(p);
    if (d == 0.0)
        throw std::invalid_argument(
            "build_piecewise: integrands vanish at d = 0; use the arcsine path");
    // R_y is even in d, and the q_bar form needs positive arguments.
    const double da = std::abs(d);

    PiecewiseModel model;
    model.params = p;
    model.d = da;
    model.q_bar_variant = use_q_bar;

    const auto fd2 = [&](double t) { return d2(t, p, da); };
    const auto fd1 = [&](double t) { return d1(t, p, da, use_q_bar); };
    for (int k = 0; k < 3; ++k) {
        const PieceSpec& s = kPieces[k];
        model.d2_pieces[k] =
            pade_from_taylor(taylor_coeffs(fd2, s.x0, s.L + s.M), s.L, s.M, s.x0);
        model.d1_pieces[k] =
            pade_from_taylor(taylor_coeffs(fd1, s.x0, s.L + s.M), s.L, s.M, s.x0);
        model.d2_fallback[k] =
            model.d2_pieces[k].denominator_root_in(s.lo - s.x0, s.hi - s.x0);
        model.d1_fallback[k] =
            model.d1_pieces[k].denominator_root_in(s.lo - s.x0, s.hi - s.x0);
    }
    return model;
}

double h_s(const PiecewiseModel& model) {
    const LagParams& p = model.params;
    const double d = model.d;
    double total = closed_term(p);
    for (int k = 0; k < 3; ++k) {
        const PieceSpec& s = kPieces[k];
        if (model.d2_fallback[k])
            total += integrate_fixed([&](double t) { return d2(t, p, d); }, s.lo, s.hi);
        else
            total += integrate_rational(model.d2_pieces[k], s.lo - s.x0, s.hi - s.x0);
        if (model.d1_fallback[k])
            total -= integrate_fixed(
                [&](double t) { return d1(t, p, d, model.q_bar_variant); }, s.lo, s.hi);
        else
            total -= integrate_rational(model.d1_pieces[k], s.lo - s.x0, s.hi - s.x0);
    }
    const double v = ry_prefactor(p, d) * total - 1.0;
    if (!(std::abs(v) <= 1.05))
        throw std::domain_error(
            "h_s: approximation breakdown, result outside [-1.05, 1.05]");
    return v;
}

double h_s(const LagParams& p, double d, bool use_q_bar) {
    check_feasible(p);
    if (d == 0.0) return arcsine_classical(p.p0, p.p_l);
    return h_s(build_piecewise(p, d, use_q_bar));
}

void dump_piecewise_csv(const PiecewiseModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "piece,a0,a1,a2,b0,b1,b2\n";
    const char* names[3] = {"low", "mid", "high"};
    const auto row = [&](const char* integrand, int k, const PadeApproximant& ap) {
        out << integrand << '_' << names[k];
        for (int i = 0; i < 3; ++i) out << ',' << coeff(ap.num, i);
        for (int i = 0; i < 3; ++i) out << ',' << coeff(ap.den, i);
        out << '\n';
    };
    for (int k = 0; k < 3; ++k) row("d2", k, model.d2_pieces[k]);
    for (int k = 0; k < 3; ++k) row("d1", k, model.d1_pieces[k]);
}

}  // namespace onebit
