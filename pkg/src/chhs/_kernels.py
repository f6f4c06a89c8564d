"""
Compiled inner loop of the multigrid smoother.

The arithmetic is written in the same order as the array formulation in
the docs of :func:`chhs.fas_solver.smooth`, so results do not depend on
whether a cell is updated here or by an equivalent vectorized expression.
"""

import numba
import numpy as np


@numba.njit(cache=True)
def sweep_color(phi, mu, p, f_phi, f_mu, f_p, st_m, st_a, st_o, mode, aux1, aux2, aux3,
                h, s, gamma, c_lap, color):
    nx = f_phi.shape[0]; ny = f_phi.shape[1]
    ih2 = 1.0 / (h * h)
    ok = True
    for i0 in range(nx):
        for j0 in range((i0 + color) % 2, ny, 2):
            i = i0 + 1; j = j0 + 1
            em = st_m[0, i0, j0]; wm = st_m[1, i0, j0]; nm = st_m[2, i0, j0]; sm = st_m[3, i0, j0]; sig_m = st_m[4, i0, j0]
            ea = st_a[0, i0, j0]; wa = st_a[1, i0, j0]; na = st_a[2, i0, j0]; sa = st_a[3, i0, j0]; sig_a = st_a[4, i0, j0]
            eo = st_o[0, i0, j0]; wo = st_o[1, i0, j0]; no = st_o[2, i0, j0]; so = st_o[3, i0, j0]; n_faces = st_o[4, i0, j0]
            sm_mu = ((em * mu[i + 1, j] + wm * mu[i - 1, j]) + nm * mu[i, j + 1]) + sm * mu[i, j - 1]
            sa_p = ((ea * p[i + 1, j] + wa * p[i - 1, j]) + na * p[i, j + 1]) + sa * p[i, j - 1]
            sa_mu = ((ea * mu[i + 1, j] + wa * mu[i - 1, j]) + na * mu[i, j + 1]) + sa * mu[i, j - 1]
            so_phi = ((eo * phi[i + 1, j] + wo * phi[i - 1, j]) + no * phi[i, j + 1]) + so * phi[i, j - 1]
            so_p = ((eo * p[i + 1, j] + wo * p[i - 1, j]) + no * p[i, j + 1]) + so * p[i, j - 1]
            x = phi[i, j]
            if mode == 0:
                b = aux1[i0, j0]
                g0 = 0.25 * (x * x + b * b) * (x + b)
                dg = 0.25 * (3.0 * x * x + 2.0 * x * b + b * b)
            elif mode == 1:
                g0 = x * x * x
                dg = 3.0 * x * x
            else:
                g0 = aux1[i0, j0] + aux2[i0, j0] * (x - aux3[i0, j0])
                dg = aux2[i0, j0]
            a = s * sig_m * ih2
            bb = s * sig_a * ih2
            c = dg + c_lap * n_faces * ih2
            d = gamma * sig_a * ih2
            e = n_faces * ih2
            rhs1 = f_phi[i0, j0] + s * sm_mu * ih2 + s * sa_p * ih2
            rhs2 = f_mu[i0, j0] + g0 - dg * x - c_lap * so_phi * ih2
            rhs3 = f_p[i0, j0] - so_p * ih2 - gamma * sa_mu * ih2
            be = bb / e
            g = a - be * d
            nphi = (rhs1 + be * rhs3 - g * rhs2) / (1.0 + g * c)
            nmu = rhs2 + c * nphi
            npp = -(rhs3 + d * nmu) / e
            if not (np.isfinite(nphi) and np.isfinite(npp)):
                ok = False
            phi[i, j] = nphi; mu[i, j] = nmu; p[i, j] = npp
    return ok
