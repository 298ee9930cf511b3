from typing import Iterable, TextIO

import pandas as pd

from app.domain.value_objects.trajectory import TrajectoryPoint

CSV_COLUMNS = ["t", "re_x1", "im_x1", "re_x2", "im_x2"]


def trajectory_frame(points: Iterable[TrajectoryPoint]) -> pd.DataFrame:
    """궤적 -> 데이터프레임 (열: t, re_x1, im_x1, re_x2, im_x2)"""
    rows = [[p.t, p.x1.real, p.x1.imag, p.x2.real, p.x2.imag] for p in points]
    return pd.DataFrame(rows, columns=CSV_COLUMNS, dtype=float)


def write_csv(points: Iterable[TrajectoryPoint], stream: TextIO) -> None:
    """헤더 포함 CSV 출력 (17 유효숫자, 줄바꿈 \\n)"""
    trajectory_frame(points).to_csv(stream, index=False, float_format="%.17g", lineterminator="\n")
