from . import certify, coverage, geom, measure, numerics, share

__author__ = "Louis Maddox"
__license__ = "MIT"
__description__ = "Rotation-invariant disc measures and certified plank and angular-domain coverings."
__url__ = "https://github.com/lmmx/plankcert"
__uri__ = __url__
__email__ = "louismmx@gmail.com"
