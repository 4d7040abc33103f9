#ifndef NMQT_STATE_HPP
#define NMQT_STATE_HPP

#include <cmath>
#include <complex>

namespace nmqt {

using Complex = std::complex<double>;

/// Two-level pure state alpha|e> + beta|g>.
struct PureState {
    Complex alpha{0.0, 0.0};
    Complex beta{0.0, 0.0};

    double norm2() const { return std::norm(alpha) + std::norm(beta); }

    PureState normalized() const {
        const double n = std::sqrt(norm2());
        return {alpha / n, beta / n};
    }

    static PureState excited() { return {{1.0, 0.0}, {0.0, 0.0}}; }
    static PureState ground() { return {{0.0, 0.0}, {1.0, 0.0}}; }
};

/// 2x2 Hermitian matrix in the {|e>, |g>} basis, stored by independent
/// components (rho_ge is implicitly conj(rho_eg)).  Also used for
/// Hermitian-valued derivatives, which are traceless rather than trace-one.
struct DensityMatrix {
    double rho_ee = 0.0;
    double rho_gg = 0.0;
    Complex rho_eg{0.0, 0.0};

    double trace() const { return rho_ee + rho_gg; }

    double min_eigenvalue() const {
        const double mid = 0.5 * (rho_ee + rho_gg);
        const double dq = std::sqrt(0.25 * (rho_ee - rho_gg) * (rho_ee - rho_gg) +
                                    std::norm(rho_eg));
        return mid - dq;
    }

    static DensityMatrix pure(const PureState& s) {
        return {std::norm(s.alpha), std::norm(s.beta), s.alpha * std::conj(s.beta)};
    }

    static DensityMatrix excited() { return {1.0, 0.0, {0.0, 0.0}}; }
    static DensityMatrix ground() { return {0.0, 1.0, {0.0, 0.0}}; }
};

inline DensityMatrix operator+(const DensityMatrix& a, const DensityMatrix& b) {
    return {a.rho_ee + b.rho_ee, a.rho_gg + b.rho_gg, a.rho_eg + b.rho_eg};
}

inline DensityMatrix operator*(double s, const DensityMatrix& m) {
    return {s * m.rho_ee, s * m.rho_gg, s * m.rho_eg};
}

/// trace within trace_tol of 1 and smallest eigenvalue above -eig_tol.
inline bool is_valid_state(const DensityMatrix& rho, double trace_tol = 1e-9,
                           double eig_tol = 1e-9) {
    return std::abs(rho.trace() - 1.0) <= trace_tol &&
           rho.min_eigenvalue() >= -eig_tol;
}

/// H_S = (delta_eg / 2) sigma_z + rabi * sigma_x.
struct DriveHamiltonian {
    double delta_eg = 0.0;
    double rabi = 0.0;
};

/// General 2x2 complex matrix (row-major: a b / c d).
struct Mat2 {
    Complex a, b, c, d;

    PureState apply(const PureState& s) const {
        return {a * s.alpha + b * s.beta, c * s.alpha + d * s.beta};
    }

    Mat2 mul(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    static Mat2 identity() { return {{1, 0}, {0, 0}, {0, 0}, {1, 0}}; }
};

/// exp(-i H_S t), exact: H_S = r (n.sigma) with r = sqrt((delta/2)^2 + rabi^2)
/// gives cos(rt) I - i sin(rt)/r H_S.
inline Mat2 drive_unitary(const DriveHamiltonian& h, double t) {
    const double hz = 0.5 * h.delta_eg;
    const double r = std::hypot(hz, h.rabi);
    if (r == 0.0) return Mat2::identity();
    const double cs = std::cos(r * t);
    const double sn = std::sin(r * t) / r;
    const Complex i{0.0, 1.0};
    return {cs - i * sn * hz, -i * sn * h.rabi,
            -i * sn * h.rabi, cs + i * sn * hz};
}

}  // namespace nmqt

#endif
