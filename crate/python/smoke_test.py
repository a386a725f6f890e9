"""Smoke test for the compiled `twopath` extension module."""

import json
import math

import twopath


def main():
    assert "bartell" in twopath.presets()

    m = twopath.UnifiedModel(2.0, 5.0)
    for y in (-1.0, 0.0, 0.3, 2.0):
        p, v = m.predictability(y), m.visibility(y)
        assert abs(p * p + v * v - 1.0) < 1e-12
    nu, r = m.fringe_index()
    assert abs(r - 0.4) < 1e-12 and abs(nu - 0.26379206932814146 / 0.4) < 1e-12

    mixed = twopath.UnifiedModel(1.0, 1.0, k=0.5)
    assert mixed.duality_residual(0.0) < 0.0

    rep = twopath.report(preset="bartell")
    assert abs(rep["R"] - 1 / 11) < 1e-12
    assert abs(rep["nu_rounded"] - 2.64) < 5e-3

    kaon = twopath.MesonParams.kaon()
    t = math.pi / kaon.model().b
    assert abs(2 * kaon.strangeness_probability("K0", "K0", t) - 0.9262362722073862) < 1e-12

    eta = twopath.MottParams.preset("alpha-150keV").sommerfeld_eta()
    assert 0.30 <= 1 / eta <= 0.36

    prof = twopath.profile(preset="kaon", grid="0:12:121")
    assert len(prof["rows"]) == 121
    assert twopath.profile_csv(preset="kaon") == twopath.profile_csv(preset="kaon")
    assert twopath.profile_svg(preset="C12-5MeV", plot="duality").startswith("<svg")

    out = twopath.verify(preset="beamsplitter")
    assert out["passed"], json.dumps(out, indent=2)

    try:
        twopath.report(config='{"kind":"bartell","parameters":{"k":1e7,"x0":1e-4,"d":3e-3,"l":0.1,"f":0.1}}')
    except ValueError as e:
        assert "f" in str(e)
    else:
        raise AssertionError("l == f accepted")

    print("smoke test ok")


if __name__ == "__main__":
    main()
