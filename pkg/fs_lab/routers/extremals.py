from fastapi import APIRouter, Depends, HTTPException, Query

from fs_lab.deps import get_alpha
from fs_lab.errors import FsLabError
from fs_lab.schemas import (
    AlphaParam,
    CheckConcaveRequest,
    CheckConcaveResponse,
    ExtremalResponse,
    coerce_alpha,
)
from fs_lab.services.concave import check_concave
from fs_lab.services.render import extremal_payload
from fs_lab.services.series import ComplexSeries

router = APIRouter()

MAX_ORDER = 4096


@router.get("/extremal", response_model=ExtremalResponse)
async def get_extremal(
    lam: float = Query(..., alias="lambda"),
    order: int = Query(16),
    alpha: AlphaParam = Depends(get_alpha),
):
    try:
        if not 1 <= order <= MAX_ORDER:
            raise HTTPException(status_code=400, detail=f"order must lie in [1, {MAX_ORDER}]")
        payload = extremal_payload(alpha.alpha, lam, order)
        return ExtremalResponse(
            alpha=payload["alpha"],
            lam=payload["lambda"],
            regime=payload["regime"],
            coefficients=payload["coefficients"],
            achieved=payload["achieved"],
            bound=payload["bound"],
            note=payload["note"],
        )
    except HTTPException as he:
        raise he
    except FsLabError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@router.post("/check-concave", response_model=CheckConcaveResponse)
async def post_check_concave(req: CheckConcaveRequest):
    try:
        alpha = coerce_alpha(req.alpha)
        if len(req.coefficients) < 3:
            raise HTTPException(status_code=400, detail="need at least a0, a1 and a2")
        f = ComplexSeries(complex(re, im) for re, im in req.coefficients)
        min_re = check_concave(f, alpha)
        return CheckConcaveResponse(min_re_p=min_re, verdict="PASS" if min_re > 0 else "FAIL")
    except HTTPException as he:
        raise he
    except FsLabError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))
