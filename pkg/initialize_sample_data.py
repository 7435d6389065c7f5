#!/usr/bin/env python3
"""
Write the sample symbol table and parameter files used by the demo and README.
Files go to CALC_SAMPLE_DIR (default: sample_data), with an index workbook listing
the group each parameter belongs to.
"""

import os
from fractions import Fraction

import pandas as pd

from config import ensure_dir, get_sample_dir
from data_models import format_rational
from generators import default_table
from multisegment import ABlock, AParam, SpehBlock, SpehParam, dimension
from parsers import format_param, format_table
from reducibility import red_points

QUARTER = Fraction(1, 4)


def sample_parameters(table):
    """(file name, parameter, group, n, description)"""
    return [
        ("cshape_sp.txt",
         SpehParam((SpehBlock("rho1", 1, 0), SpehBlock("rho1", 3, 0), SpehBlock("rho1", 5, 0)), table),
         "sp", 4, "Jord {1, 3, 5}, same type as the L-group"),
        ("jord13_o_even.txt",
         SpehParam((SpehBlock("rho1", 1, 0), SpehBlock("rho1", 3, 0)), table),
         "o-even", 2, "Jord {1, 3} on O(4)"),
        ("twisted_so_odd.txt",
         SpehParam((SpehBlock("rho1", 1, QUARTER), SpehBlock("rho1", 1, -QUARTER)), table),
         "so-odd", 1, "one twisted pair, opposite type"),
        ("aparam_sp.txt",
         AParam((ABlock("rho1", 1, 3, 0),), table),
         "sp", 1, "a single Arthur block"),
        ("inadmissible_o_even.txt",
         SpehParam((SpehBlock("rho1", 2, QUARTER), SpehBlock("rho1", 2, -QUARTER)), table),
         "o-even", 2, "overlapping twisted blocks, rejected"),
    ]


def create_sample_files():
    """Write the table, the parameter files and index.xlsx"""
    sample_dir = ensure_dir(get_sample_dir())
    table = default_table()

    with open(os.path.join(sample_dir, "table.txt"), "w", encoding="utf-8") as handle:
        handle.write("\n".join(format_table(table)) + "\n")

    rows = []
    for name, param, group, n, description in sample_parameters(table):
        with open(os.path.join(sample_dir, name), "w", encoding="utf-8") as handle:
            handle.write("\n".join(format_param(param)) + "\n")
        rows.append({
            "file": name,
            "group": group,
            "n": n,
            "dimension": dimension(param),
            "description": description,
        })

    pd.DataFrame(rows).to_excel(os.path.join(sample_dir, "index.xlsx"), index=False)
    print(f"✅ Sample files written to {sample_dir}/")
    return sample_dir


def show_reducibility(sample_dir):
    """Quick sanity line for the twisted sample"""
    from data_models import GroupForm, GroupKind
    from parsers import read_param, read_table

    table = read_table(os.path.join(sample_dir, "table.txt"))
    e = read_param(os.path.join(sample_dir, "twisted_so_odd.txt"), table)
    points = red_points(e, "rho1", GroupForm(GroupKind.SO_ODD, 1))
    print(f"ℹ️ twisted_so_odd.txt: red(rho1) = {{{', '.join(format_rational(s) for s in points)}}}")


def main():
    """Main initialization function"""
    print("🚀 Initializing sample data...")
    print("=" * 50)

    sample_dir = create_sample_files()
    try:
        show_reducibility(sample_dir)
    except Exception as e:
        print(f"⚠️ Warning: could not read the samples back: {e}")

    print("=" * 50)
    print("Try:")
    print(f"  python calc.py {sample_dir}/table.txt {sample_dir}/cshape_sp.txt --group sp --n 4 check")


if __name__ == "__main__":
    main()
