"""Physical constants in spectroscopic units (cm^-1, angstrom, amu).

CONV_AMU is hbar^2 / (2 * 1 amu) expressed in cm^-1 * angstrom^2, from the
CODATA 2018 values

    h   = 6.62607015e-34 J s        (exact)
    c   = 299792458 m s^-1           (exact)
    amu = 1.66053906660e-27 kg

Dividing an energy in joules by h*c*100 gives cm^-1 and 1 m^2 = 1e20 A^2, so

    hbar^2 / (2 amu) / (h c 100) * 1e20 = h / (8 pi^2 c amu) * 1e18
                                         = 16.857629191640 cm^-1 A^2.

For a reduced mass mu (amu) the constant is CONV_AMU / mu.
"""

PLANCK_J_S = 6.62607015e-34
LIGHT_M_S = 299792458.0
AMU_KG = 1.66053906660e-27

CONV_AMU = 16.857629191640176


def conv_for_mass(mu):
    """hbar^2 / (2 mu) in cm^-1 * angstrom^2 for mu given in amu."""
    return CONV_AMU / mu
