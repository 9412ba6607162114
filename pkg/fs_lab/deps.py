from fastapi import HTTPException, Query

from fs_lab.errors import InvalidAlpha
from fs_lab.schemas import AlphaParam, coerce_alpha


async def get_alpha(alpha: float = Query(..., description="opening-angle parameter in (1,2]")) -> AlphaParam:
    """
    Dependency to validate the alpha query parameter.
    Out-of-range values are a client error, not a 422 schema failure.
    """
    try:
        return coerce_alpha(alpha)
    except InvalidAlpha as e:
        raise HTTPException(status_code=400, detail=str(e))
