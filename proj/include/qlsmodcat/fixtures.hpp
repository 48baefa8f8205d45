#pragma once

#include "qlsmodcat/hopf.hpp"

namespace qlsmodcat::fixtures {

/// Gamma = Z2, g = u, chi(u) = -1.
QlsDatum sweedler();
/// Gamma = Z2, theta = 2, g_1 = g_2 = u, chi_1 = chi_2 = sign: U = exterior algebra # kZ2.
QlsDatum clifford();
/// Gamma = Z2 x Z2, g_1 = g_2 = (1,0), chi_1 = (1,0), chi_2 = (1,1).
QlsDatum exterior_z2z2();
/// Gamma = Z4, g = 1, chi = (2): q = -1, g^2 != 1, chi^2 = 1.
QlsDatum z4_minus_one();
/// Gamma = Z2 x Z2, g_1 = (1,0), g_2 = (0,1), chi_1 = chi_2 = (1,1).
QlsDatum z2z2_pair();
/// Gamma = Z4, g = 1, chi = (1): q = zeta_4, N = 4.
QlsDatum z4_order_four();

/// mu_1 = 1 on z4_minus_one().
LiftingDatum z4_mu_lifting();
/// lambda_12 = 1 on z2z2_pair().
LiftingDatum z2z2_lambda_lifting();

}  // namespace qlsmodcat::fixtures
