from typing import List

from fastapi import APIRouter, Depends, HTTPException, Query

from fs_lab.config import get_settings
from fs_lab.deps import get_alpha
from fs_lab.errors import FsLabError
from fs_lab.schemas import AlphaParam, BoundResponse, CurveResponse, CurveRow
from fs_lab.services.bounds import fs_bound
from fs_lab.services.render import curve_header, curve_rows, lambda_grid

router = APIRouter()

MAX_CURVE_STEPS = 2001


@router.get("/bound", response_model=BoundResponse)
async def get_bound(
    lam: float = Query(..., alias="lambda"),
    alpha: AlphaParam = Depends(get_alpha),
):
    try:
        result = fs_bound(alpha, lam)
        return BoundResponse(
            alpha=alpha.alpha,
            lam=lam,
            bound=result.value,
            regime=result.regime,
            thresholds=result.thresholds,
            extremal=result.extremal,
        )
    except FsLabError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@router.get("/curve", response_model=CurveResponse)
async def get_curve(
    lambda_min: float = Query(...),
    lambda_max: float = Query(...),
    steps: int = Query(45),
    compare: List[str] = Query([]),
    alpha: AlphaParam = Depends(get_alpha),
):
    try:
        if not lambda_min < lambda_max:
            raise HTTPException(status_code=400, detail="lambda_min must be smaller than lambda_max")
        if not 2 <= steps <= MAX_CURVE_STEPS:
            raise HTTPException(status_code=400, detail=f"steps must lie in [2, {MAX_CURVE_STEPS}]")
        unknown = [c for c in compare if c not in ("oracle", "classical", "koepf")]
        if unknown:
            raise HTTPException(status_code=400, detail=f"unknown compare columns: {unknown}")

        lambdas = lambda_grid(lambda_min, lambda_max, steps)
        rows = curve_rows(alpha.alpha, lambdas, compare, get_settings().worker_count())
        keys = [k if k != "lambda" else "lam" for k in curve_header(compare)]
        return CurveResponse(
            alpha=alpha.alpha,
            rows=[CurveRow(**dict(zip(keys, row))) for row in rows],
        )
    except HTTPException as he:
        raise he
    except FsLabError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))
