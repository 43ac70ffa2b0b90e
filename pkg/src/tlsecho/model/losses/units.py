import numpy as np

from tlsecho.model.echo.constants import CONSTANTS
from tlsecho.model.utils import as_output, validate_array


def dbm_to_watt(power_dbm):
    power = validate_array(power_dbm, "power_dbm")
    return as_output(power_dbm, 1e-3 * 10.0 ** (power / 10.0))


def watt_to_dbm(power_w):
    power = validate_array(power_w, "power_w", minimum=0.0, strict=True)
    return as_output(power_w, 10.0 * np.log10(power / 1e-3))


def db_to_ratio(value_db):
    value = validate_array(value_db, "value_db")
    return as_output(value_db, 10.0 ** (value / 10.0))


def ratio_to_db(ratio):
    value = validate_array(ratio, "ratio", minimum=0.0, strict=True)
    return as_output(ratio, 10.0 * np.log10(value))


def debye_to_si(dipole_debye):
    value = validate_array(dipole_debye, "dipole_debye")
    return as_output(dipole_debye, value * CONSTANTS.debye)


def si_to_debye(dipole_si):
    value = validate_array(dipole_si, "dipole_si")
    return as_output(dipole_si, value / CONSTANTS.debye)
