"""Prime-field arithmetic context underlying every other module"""

from app.field.context import FieldCtx, FieldElem, ff_make, ff_op
from app.field.linalg import det_mod

__all__ = [
    "FieldCtx",
    "FieldElem",
    "ff_make",
    "ff_op",
    "det_mod",
]
