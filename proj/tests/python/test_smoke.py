import math

import impurity_thermo as it


def approx(a, b, tol):
    assert abs(a - b) <= tol, f"{a} vs {b} (tol {tol})"


def main():
    bath = it.BathModel.drude(0.4, 4.0)
    p = it.phi_tilde(bath, 4.0)
    approx(p.real, 0.2, 1e-14)
    approx(p.imag, 0.2, 1e-14)

    bo = it.BosonicBO(1.0, bath)
    approx(bo.vartheta(0.0), 0.5 * math.log(5.0 / 3.0), 1e-14)

    fo = it.FermionicBO(-1.0, bath)
    approx(fo.vartheta(0.0), -0.07421000255913664, 1e-12)
    assert fo.varphi(0.5) == -fo.varphi(-0.5)

    sp = it.spectral_provider("bose")
    a_sum = it.a_by_matsubara(sp, 1.0)
    a_int = it.a_by_integral(sp, 1.0)
    approx(a_sum, -0.260299376, 1e-7)
    approx(a_sum, a_int, 1e-8)

    pt = it.thermo_point(sp, 1.0)
    approx(pt.U, pt.A + pt.T * pt.S, 1e-12)

    phi_area, theta_area, rel = it.equal_area_check(sp)
    approx(phi_area, theta_area, 1e-6)

    try:
        it.occupation(it.Statistics.bose(), 1.0, 0.0)
    except Exception:
        pass
    else:
        raise AssertionError("Bose occupation at omega = 0 should raise")

    print("python smoke: ok")


if __name__ == "__main__":
    main()
