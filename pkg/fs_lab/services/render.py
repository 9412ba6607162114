"""Byte-stable rendering: 9 significant digits, '.' separator, no locale."""

import json
import math
from typing import Any, Iterable, List, Optional, Sequence

from fs_lab.schemas import BoundResult, Thresholds
from fs_lab.services.bounds import classical_s_bound, fs_bound
from fs_lab.services.concave import coeff_pair, functional, regime_extremal
from fs_lab.services.oracle import oracle_sweep
from fs_lab.services.starlike import koepf_bound

SIG_DIGITS = 9


def fmt(x: Optional[float]) -> str:
    if x is None:
        return ""
    if not math.isfinite(x):
        return "inf" if x > 0 else ("-inf" if x < 0 else "nan")
    text = format(x, f".{SIG_DIGITS}g")
    return "0" if text == "-0" else text


def rounded(x: float) -> float:
    """Float carrying exactly the digits fmt() prints."""
    value = float(fmt(x)) if math.isfinite(x) else x
    return 0.0 if value == 0.0 else value


def _round_tree(obj: Any) -> Any:
    if isinstance(obj, float):
        return rounded(obj)
    if isinstance(obj, dict):
        return {k: _round_tree(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_tree(v) for v in obj]
    return obj


def to_json(payload: Any) -> str:
    return json.dumps(_round_tree(payload), ensure_ascii=True)


def thresholds_dict(th: Thresholds) -> dict:
    return {k: getattr(th, k) for k in ("t0", "t1", "t2", "lam1", "lam2", "t3", "t4")}


def bound_payload(alpha: float, lam: float, result: BoundResult) -> dict:
    return {
        "alpha": alpha,
        "lambda": lam,
        "bound": result.value,
        "regime": result.regime.value,
        "thresholds": thresholds_dict(result.thresholds),
        "extremal": result.extremal.model_dump(),
    }


def csv_lines(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> List[str]:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(fmt(v) if isinstance(v, float) or v is None else str(v) for v in row))
    return lines


def lambda_grid(lambda_min: float, lambda_max: float, steps: int) -> List[float]:
    span = lambda_max - lambda_min
    return [lambda_min + span * i / (steps - 1) for i in range(steps)]


def curve_header(compare: Sequence[str]) -> List[str]:
    header = ["lambda", "bound", "regime"]
    if "oracle" in compare:
        header.append("oracle")
    if "classical" in compare:
        header.append("classical_s")
    if "koepf" in compare:
        header.append("koepf_starlike")
    return header


def curve_rows(alpha: float, lambdas: Sequence[float], compare: Sequence[str], workers: int = 1) -> List[list]:
    """One row per lambda, columns as in curve_header; classical is empty off [0, 1]."""
    oracle = oracle_sweep(alpha, lambdas, workers=workers) if "oracle" in compare else None
    rows = []
    for i, lam in enumerate(lambdas):
        result = fs_bound(alpha, lam)
        row = [lam, result.value, result.regime.value]
        if oracle is not None:
            row.append(oracle[i])
        if "classical" in compare:
            row.append(classical_s_bound(lam) if 0.0 <= lam <= 1.0 else None)
        if "koepf" in compare:
            row.append(koepf_bound(lam))
        rows.append(row)
    return rows


def extremal_payload(alpha: float, lam: float, order: int) -> dict:
    result = fs_bound(alpha, lam)
    f, note = regime_extremal(alpha, lam, order, result)
    coeffs = [(float(c.real), float(c.imag)) for c in f.coeffs[1 : order + 1]]
    return {
        "alpha": alpha,
        "lambda": lam,
        "regime": result.regime.value,
        "coefficients": coeffs,
        "achieved": functional(coeff_pair(f), lam),
        "bound": result.value,
        "note": note,
    }
