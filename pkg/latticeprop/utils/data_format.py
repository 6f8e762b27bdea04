"""
return data in specific format
"""
import io
import json

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # pylint: disable=C0413
import pandas as pd  # pylint: disable=C0413

from latticeprop.resources import constants as cns  # pylint: disable=C0413

FLOAT_FORMAT = f"%.{cns.CSV_SIGNIFICANT_DIGITS}g"


def table(rows, columns: list, response_type: str = "panda_df"):
    """
    Args:
        rows (list): dict per row
        columns (list): column order
        response_type (str, optional): panda_df | json. Defaults to "panda_df".

    Returns:
        Pandas DataFrame: rows in column order
      or
        Json: records
    """
    if response_type not in ("panda_df", "json"):
        raise ValueError(f"response_type must be panda_df or json, got {response_type!r}")
    result = pd.DataFrame(list(rows), columns=columns)
    result.reset_index(drop=True, inplace=True)
    if response_type == "json":
        return result.to_json(orient="records")
    return result


def amplitude_rows(xs, amplitudes) -> list:
    """x, re, im, mag rows for a profile"""
    return [
        {"x": x, "re": amp.re, "im": amp.im, "mag": abs(amp)}
        for x, amp in zip(xs, amplitudes)
    ]


def _plain(value):
    if hasattr(value, "item"):
        return value.item()
    return value


def to_csv(result: pd.DataFrame) -> str:
    return result.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def to_json(result: pd.DataFrame, command: str, params: dict) -> str:
    """
    Args:
        result (Pandas DataFrame): table
        command (str): CLI command name
        params (dict): parameters that produced the table

    Returns:
        str: {"meta": {command, params, version}, "rows": [...]}
    """
    records = [
        {column: _plain(value) for column, value in zip(result.columns, row)}
        for row in result.itertuples(index=False, name=None)
    ]
    document = {
        "meta": {"command": command, "params": params, "version": cns.VERSION},
        "rows": records,
    }
    return json.dumps(document, indent=2) + "\n"


def to_svg(result: pd.DataFrame, x_column: str, title: str, xlabel: str) -> str:
    """line plot of every other numeric column against x_column"""
    plt.rcParams["svg.hashsalt"] = cns.SVG_HASH_SALT
    figure, axis = plt.subplots(figsize=(7, 4))
    try:
        for column in result.columns:
            if column == x_column:
                continue
            axis.plot(result[x_column], result[column], label=column, linewidth=1.2)
        axis.set_title(title)
        axis.set_xlabel(xlabel)
        axis.legend(loc="best")
        axis.grid(True, linewidth=0.3)
        buffer = io.StringIO()
        figure.savefig(buffer, format="svg", metadata={"Date": None})
    finally:
        plt.close(figure)
    return buffer.getvalue()
