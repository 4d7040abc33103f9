#ifndef NMQT_SUPEROP_HPP
#define NMQT_SUPEROP_HPP

#include "nmqt/state.hpp"

namespace nmqt {

/// Lowering-operator dissipator D[sigma-]rho = s- rho s+ - {s+ s-, rho}/2.
/// Traceless for every input.
inline DensityMatrix dissipator(const DensityMatrix& rho) {
    return {-rho.rho_ee, rho.rho_ee, -0.5 * rho.rho_eg};
}

/// Homodyne measurement superoperator H[c]rho = c rho + rho c^dag - <c + c^dag> rho
/// with c = e^{-i phi} sigma-.  <c + c^dag> = 2 Re(e^{-i phi} rho_eg).
inline DensityMatrix measurement_superop(const DensityMatrix& rho, double phi) {
    const Complex eiphi = std::polar(1.0, phi);
    const double expect = 2.0 * std::real(rho.rho_eg / eiphi);
    return {-expect * rho.rho_ee,
            expect * rho.rho_ee,
            eiphi * rho.rho_ee - expect * rho.rho_eg};
}

/// drho/dt = -i [H_S, rho] + rate * D[sigma-] rho.
inline DensityMatrix lindblad_rhs(const DensityMatrix& rho, const DriveHamiltonian& h,
                                  double rate) {
    const double omega = h.rabi;
    const double im_eg = std::imag(rho.rho_eg);
    const Complex i{0.0, 1.0};
    const Complex comm_eg = h.delta_eg * rho.rho_eg + omega * (rho.rho_gg - rho.rho_ee);
    return {-2.0 * omega * im_eg - rate * rho.rho_ee,
            2.0 * omega * im_eg + rate * rho.rho_ee,
            -i * comm_eg - 0.5 * rate * rho.rho_eg};
}

}  // namespace nmqt

#endif
