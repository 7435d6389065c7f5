"""
Tabular views of a session, printed with pandas and exported to Excel or JSON
"""
import json
import logging
import os
from typing import Dict, List, Optional

import pandas as pd

from data_models import GroupForm, format_rational
from exceptions import CalcError, DimensionMismatch, ClosureViolation, InadmissibleParam
from lfactor import OrderLedger, Style, candidate_points, order_ledger, product_ledger
from lparam import build_parameter, pairing_table
from multisegment import SpehParam, Support, param_support
from reducibility import O2nFlags, a_rho, red_points

logger = logging.getLogger(__name__)


def support_frame(sup: Support) -> pd.DataFrame:
    rows = [{"sigma": sigma, "exponent": format_rational(exp), "multiplicity": n} for sigma, exp, n in sup.items()]
    return pd.DataFrame(rows, columns=["sigma", "exponent", "multiplicity"])


def speh_frame(e: SpehParam) -> pd.DataFrame:
    rows = [{"sigma": blk.sigma, "a": blk.a, "x": format_rational(blk.x)} for blk in e.blocks]
    return pd.DataFrame(rows, columns=["sigma", "a", "x"])


def pairing_frame(rows: List[Dict[str, object]]) -> pd.DataFrame:
    return pd.DataFrame(rows, columns=["id", "sigma", "a", "x", "pairing", "partner"])


def ledger_frame(ledger: OrderLedger, **labels) -> pd.DataFrame:
    rows = [dict(labels, s=format_rational(s), ord=n) for s, n in ledger.entries]
    return pd.DataFrame(rows, columns=list(labels) + ["s", "ord"])


def reducibility_frame(e: SpehParam, form: GroupForm, flags: O2nFlags) -> pd.DataFrame:
    rows = []
    for name in e.table.names():
        try:
            points = ", ".join(format_rational(s) for s in red_points(e, name, form, flags))
        except InadmissibleParam as exc:
            points = f"inadmissible: {exc}"
        rows.append({"rho": name, "a_rho": str(a_rho(e, name, form)), "red": points})
    return pd.DataFrame(rows, columns=["rho", "a_rho", "red"])


def render(frame: pd.DataFrame) -> str:
    """Plain-text table, or '(empty)' when there are no rows"""
    if frame.empty:
        return "(empty)"
    return frame.to_string(index=False)


class ReportWriter:
    """Collects the tables of one session and writes them to disk"""

    def __init__(self, e: SpehParam, form: GroupForm, flags: Optional[O2nFlags] = None,
                 support: Optional[Support] = None, radius: int = 4):
        self.e = e
        self.form = form
        self.flags = flags or O2nFlags()
        self.support = support if support is not None else param_support(e)
        self.radius = radius

    def tables(self) -> Dict[str, pd.DataFrame]:
        tables = {
            "Support": support_frame(self.support),
            "Speh Blocks": speh_frame(self.e),
            "Reducibility": reducibility_frame(self.e, self.form, self.flags),
        }
        try:
            tables["Pairing"] = pairing_frame(pairing_table(build_parameter(self.e, self.form)))
        except (DimensionMismatch, ClosureViolation) as exc:
            logger.warning("pairing table skipped: %s", exc)

        orders: List[pd.DataFrame] = []
        for name in self.e.table.names():
            points = candidate_points(self.e, name, self.radius)
            for style in Style:
                orders.append(ledger_frame(order_ledger(style, name, self.e, self.form, points),
                                           rho=name, style=style.value, kind="r"))
                orders.append(ledger_frame(product_ledger(style, name, self.e, self.form, points),
                                           rho=name, style=style.value, kind="product"))
        tables["Orders"] = pd.concat(orders, ignore_index=True) if orders else pd.DataFrame()
        return tables

    def save_to_excel(self, output_file: str):
        """One sheet per table"""
        tables = self.tables()
        with pd.ExcelWriter(output_file, engine="openpyxl") as writer:
            for sheet, frame in tables.items():
                frame.to_excel(writer, sheet_name=sheet, index=False)
        logger.info("report saved to %s", output_file)

    def save_to_json(self, output_file: str):
        tables = {sheet: frame.to_dict(orient="records") for sheet, frame in self.tables().items()}
        with open(output_file, "w", encoding="utf-8") as handle:
            json.dump(tables, handle, indent=2, default=str)
        logger.info("report saved to %s", output_file)

    def save(self, output_file: str) -> str:
        extension = os.path.splitext(output_file)[1].lower()
        if extension == ".xlsx":
            self.save_to_excel(output_file)
        elif extension == ".json":
            self.save_to_json(output_file)
        else:
            raise CalcError(f"export supports .xlsx and .json, got {output_file!r}")
        return output_file
