#pragma once

// Slow reference implementations in 100-digit binary floating point.
// Plain term-by-term sums straight from the series definitions; nothing here
// shares code with the library under test.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_100;

struct Cplx {
    Real re;
    Real im;
};

Cplx operator+(const Cplx& a, const Cplx& b);
Cplx operator-(const Cplx& a, const Cplx& b);
Cplx operator*(const Cplx& a, const Cplx& b);
Cplx operator/(const Cplx& a, const Cplx& b);
Real abs(const Cplx& a);

Real pi();
Real gamma(const Real& x);

/// Sum_m (s/4)^m / (m! Gamma(m+a+1)).
Cplx tricomi(const Real& a, const Cplx& s);

/// (x/2)^a Sum_m (x^2/4)^m / (m! Gamma(m+a+1)).
Real bessel_i(const Real& a, const Real& x);

/// f + i g = tricomi(a, i omega).
Cplx fg(const Real& a, const Real& omega);

/// ber/bei from the defining series with cos/sin((3a/4 + k/2) pi).
Cplx kelvin(const Real& a, const Real& x);

/// (f_nu f_{nu+2} + g_nu g_{nu+2}) / (g_nu f_{nu+2} - f_nu g_{nu+2}).
Real q_inverse(const Real& nu, const Real& omega);

/// I_nu(sqrt s)/I_{nu+2}(sqrt s) = (4/s) T_nu / T_{nu+2}.
Cplx compliance_laplace(const Real& nu, const Cplx& s);

/// 2(nu+1)/sqrt(s) I_{nu+1}/I_{nu+2} = (4(nu+1)/s) T_{nu+1} / T_{nu+2}.
Cplx creep_rate_laplace(const Real& nu, const Cplx& s);

/// Power series of J_a.
Real bessel_j(const Real& a, const Real& x);

/// First `count` positive zeros of J_a: scan in steps of 0.1 from 0, then bisection.
std::vector<Real> bessel_j_zeros(const Real& a, int count);

/// 4(nu+1)(nu+2) + 4(nu+1) Sum_k exp(-j_{nu+2,k}^2 t) over the given zeros.
Real creep_rate_time(const Real& nu, const Real& t, const std::vector<Real>& zeros_nu_plus_2);

std::string to_string(const Real& x);

}  // namespace oracle
