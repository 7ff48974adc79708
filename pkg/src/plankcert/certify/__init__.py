from .angular import AngularCertificate, certify_angular
from .hatbox import Slab, ZoneSpec, clipped_strip, hatbox_zone_area
from .limit import LimitRow, LimitTable, limit_derivation_check, tile_strips
from .oracle import NEAR_SINGULAR_TOL, ORACLE_TOL, OracleRow, oracle_compare
from .plank import PLANK_BOUND, PlankCertificate, certify_plank

__all__ = [
    "NEAR_SINGULAR_TOL",
    "ORACLE_TOL",
    "PLANK_BOUND",
    "AngularCertificate",
    "LimitRow",
    "LimitTable",
    "OracleRow",
    "PlankCertificate",
    "Slab",
    "ZoneSpec",
    "certify_angular",
    "certify_plank",
    "clipped_strip",
    "hatbox_zone_area",
    "limit_derivation_check",
    "oracle_compare",
    "tile_strips",
]
