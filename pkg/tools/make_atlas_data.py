"""Regenerate src/cdlie/atlas_data.json in canonical serialized form."""

import json
import os

DATA = {
    "version": 1,
    "factor_order": ["R", "C", "Cs", "H", "Hs", "O", "Os"],
    "derivation_forms": {
        "R": None,
        "C": None,
        "Cs": None,
        "H": "so(3)",
        "Hs": "sl(2,R)",
        "O": "g2(-14)",
        "Os": "g2(2)",
    },
    "square3": [
        {"k1": "R", "k2": "R", "by_l": ["so(3)", "so(2,1)"]},
        {"k1": "R", "k2": "C", "by_l": ["su(3)", "su(2,1)"]},
        {"k1": "R", "k2": "Cs", "any": "sl(3,R)"},
        {"k1": "R", "k2": "H", "by_l": ["sq(3)", "sq(2,1)"]},
        {"k1": "R", "k2": "Hs", "any": "sp(6,R)"},
        {"k1": "R", "k2": "O", "by_l": ["f4(-52)", "f4(-20)"]},
        {"k1": "R", "k2": "Os", "any": "f4(4)"},
        {"k1": "C", "k2": "C", "by_l": ["su(3) + su(3)", "su(2,1) + su(2,1)"]},
        {"k1": "C", "k2": "Cs", "any": "sl(3,C)"},
        {"k1": "C", "k2": "H", "by_l": ["su(6)", "su(4,2)"]},
        {"k1": "C", "k2": "Hs", "any": "su(3,3)"},
        {"k1": "C", "k2": "O", "by_l": ["e6(-78)", "e6(-14)"]},
        {"k1": "C", "k2": "Os", "any": "e6(2)"},
        {"k1": "Cs", "k2": "Cs", "any": "sl(3,R) + sl(3,R)"},
        {"k1": "Cs", "k2": "H", "any": "su*(6)"},
        {"k1": "Cs", "k2": "Hs", "any": "sl(6,R)"},
        {"k1": "Cs", "k2": "O", "any": "e6(-26)"},
        {"k1": "Cs", "k2": "Os", "any": "e6(6)"},
        {"k1": "H", "k2": "H", "by_l": ["so(12)", "so(8,4)"]},
        {"k1": "H", "k2": "Hs", "any": "so*(12)"},
        {"k1": "H", "k2": "O", "by_l": ["e7(-133)", "e7(-5)"]},
        {"k1": "H", "k2": "Os", "any": "e7(-5)"},
        {"k1": "Hs", "k2": "Hs", "any": "so(6,6)"},
        {"k1": "Hs", "k2": "O", "any": "e7(-25)"},
        {"k1": "Hs", "k2": "Os", "any": "e7(7)"},
        {"k1": "O", "k2": "O", "by_l": ["e8(-248)", "e8(8)"]},
        {"k1": "O", "k2": "Os", "any": "e8(-24)"},
        {"k1": "Os", "k2": "Os", "any": "e8(8)"},
    ],
    "table_IV": [
        {"name": "f4(-52)", "k1": "O", "k2": "R", "labels": "{+}"},
        {"name": "f4(-20)", "k1": "O", "k2": "R", "labels": "{{3;1}}"},
        {"name": "f4(4)", "k1": "Os", "k2": "R", "labels": "{{pm}}"},
        {"name": "e6(-78)", "k1": "C", "k2": "O", "labels": "{+}"},
        {"name": "e6(-26)", "k1": "Cs", "k2": "O", "labels": "{{pm}}"},
        {"name": "e6(-14)", "k1": "C", "k2": "O", "labels": "{{3;1}}"},
        {"name": "e6(2)", "k1": "C", "k2": "Os", "labels": "{{pm}}"},
        {"name": "e6(6)", "k1": "Cs", "k2": "Os", "labels": "{{pm}}"},
        {"name": "e7(-133)", "k1": "H", "k2": "O", "labels": "{+}"},
        {"name": "e7(-25)", "k1": "Hs", "k2": "O", "labels": "{{pm}}"},
        {"name": "e7(-5)", "k1": "H", "k2": "O", "labels": "{{3;1}}"},
        {"name": "e7(-5)", "k1": "H", "k2": "Os", "labels": "{{pm}}"},
        {"name": "e7(7)", "k1": "Hs", "k2": "Os", "labels": "{{pm}}"},
        {"name": "e8(-248)", "k1": "O", "k2": "O", "labels": "{+}"},
        {"name": "e8(-24)", "k1": "O", "k2": "Os", "labels": "{{pm}}"},
        {"name": "e8(8)", "k1": "O", "k2": "O", "labels": "{{3;1}}"},
        {"name": "e8(8)", "k1": "Os", "k2": "Os", "labels": "{{pm}}"},
    ],
    "table_V_u2": [
        {"name": "so(9)", "k1": "O", "labels": "{+}"},
        {"name": "so(8,1)", "k1": "O", "labels": "{-}"},
        {"name": "so(5,4)", "k1": "Os", "labels": "{{pm}}"},
    ],
    "table_V_u2_tensor": [
        {"name": "so(10)", "k1": "C", "k2": "O", "labels": "{+}"},
        {"name": "so(9,1)", "k1": "Cs", "k2": "O", "labels": "{{pm}}"},
        {"name": "so(8,2)", "k1": "C", "k2": "O", "labels": "{-}"},
        {"name": "so(6,4)", "k1": "C", "k2": "Os", "labels": "{{pm}}"},
        {"name": "so(5,5)", "k1": "Cs", "k2": "Os", "labels": "{{pm}}"},
        {"name": "so(12)", "k1": "H", "k2": "O", "labels": "{+}"},
        {"name": "so(10,2)", "k1": "Hs", "k2": "O", "labels": "{{pm}}"},
        {"name": "so(8,4)", "k1": "H", "k2": "O", "labels": "{-}"},
        {"name": "so(8,4)", "k1": "H", "k2": "Os", "labels": "{{pm}}"},
        {"name": "so(6,6)", "k1": "Hs", "k2": "Os", "labels": "{{pm}}"},
        {"name": "so(16)", "k1": "O", "k2": "O", "labels": "{+}"},
        {"name": "so(12,4)", "k1": "O", "k2": "Os", "labels": "{{pm}}"},
        {"name": "so(8,8)", "k1": "O", "k2": "O", "labels": "{-}"},
        {"name": "so(8,8)", "k1": "Os", "k2": "Os", "labels": "{{pm}}"},
    ],
    "table_V_g2": [
        {"name": "g2(-14)", "k1": "O"},
        {"name": "g2(2)", "k1": "Os"},
    ],
    "rows_I_II_III": [
        {
            "table": "I",
            "target": {"family": "so", "N": 1, "L": 1},
            "recipes": [{"k1": "R", "k2": "R", "nm": 1, "lm": 1}],
        },
        {
            "table": "I",
            "target": {"family": "so", "N": 2, "L": 2},
            "recipes": [
                {"k1": "R", "k2": "R", "nm": 2, "lm": 2},
                {"k1": "Hstilde", "k2": "R", "nm": 1, "lm": 1},
            ],
        },
        {
            "table": "I",
            "target": {"family": "so", "N": 4, "L": 4},
            "recipes": [
                {"k1": "R", "k2": "R", "nm": 4, "lm": 4},
                {"k1": "Hstilde", "k2": "R", "nm": 2, "lm": 2},
                {"k1": "H", "k2": "H", "nm": 1, "lm": 1},
                {"k1": "Hstilde", "k2": "Hstilde", "nm": 1, "lm": 1},
            ],
        },
        {
            "table": "I",
            "target": {"family": "so", "N": 2, "q": "n"},
            "recipes": [
                {"k1": "R", "k2": "R", "nm": 2, "lm": "n"},
                {"k1": "Hshat", "k2": "R", "nm": 1, "lm": None},
            ],
        },
        {
            "table": "I",
            "target": {"family": "so", "N": 4, "q": "2n"},
            "recipes": [
                {"k1": "R", "k2": "R", "nm": 4, "lm": "2n"},
                {"k1": "Hshat", "k2": "R", "nm": 2, "lm": None},
                {"k1": "Hs", "k2": "Hs", "nm": 1, "lm": None},
                {"k1": "Htilde", "k2": "Htilde", "nm": 1, "lm": None},
                {"k1": "Hstilde", "k2": "Hshat", "nm": 1, "lm": None},
                {"k1": "Hshat", "k2": "Hshat", "nm": 1, "lm": None},
            ],
        },
        {
            "table": "I",
            "target": {"family": "so_star", "N": 2},
            "recipes": [{"k1": "Htilde", "k2": "R", "nm": 1, "lm": None}],
        },
        {
            "table": "I",
            "target": {"family": "so_star", "N": 4},
            "recipes": [
                {"k1": "Htilde", "k2": "R", "nm": 2, "lm": None},
                {"k1": "H", "k2": "Hs", "nm": 1, "lm": None},
                {"k1": "Htilde", "k2": "Hstilde", "nm": 1, "lm": None},
                {"k1": "Htilde", "k2": "Hshat", "nm": 1, "lm": None},
            ],
        },
        {
            "table": "I",
            "target": {"family": "so_C", "N": 1},
            "recipes": [{"k1": "Cbar", "k2": "R", "nm": 1, "lm": None}],
        },
        {
            "table": "I",
            "target": {"family": "so_C", "N": 2},
            "recipes": [
                {"k1": "Cbar", "k2": "R", "nm": 2, "lm": None},
                {"k1": "Cbar", "k2": "Htilde", "nm": 1, "lm": None},
                {"k1": "Cbar", "k2": "Hstilde", "nm": 1, "lm": None},
                {"k1": "Cbar", "k2": "Hshat", "nm": 1, "lm": None},
            ],
        },
        {
            "table": "II",
            "target": {"family": "su", "N": 1, "L": 1},
            "recipes": [{"k1": "C", "k2": "R", "nm": 1, "lm": 1}],
        },
        {
            "table": "II",
            "target": {"family": "su", "N": 2, "L": 2},
            "recipes": [
                {"k1": "C", "k2": "R", "nm": 2, "lm": 2},
                {"k1": "C", "k2": "H", "nm": 1, "lm": 1},
                {"k1": "C", "k2": "Hstilde", "nm": 1, "lm": 1},
            ],
        },
        {
            "table": "II",
            "target": {"family": "su", "N": 2, "q": "n"},
            "recipes": [
                {"k1": "C", "k2": "R", "nm": 2, "lm": "n"},
                {"k1": "C", "k2": "Hs", "nm": 1, "lm": None},
                {"k1": "C", "k2": "Htilde", "nm": 1, "lm": None},
                {"k1": "C", "k2": "Hshat", "nm": 1, "lm": None},
            ],
        },
        {
            "table": "II",
            "target": {"family": "su_star", "N": 2},
            "recipes": [
                {"k1": "Cs", "k2": "H", "nm": 1, "lm": None},
                {"k1": "Cs", "k2": "Htilde", "nm": 1, "lm": None},
            ],
        },
        {
            "table": "II",
            "target": {"family": "sl_R", "N": 1},
            "recipes": [{"k1": "Cs", "k2": "R", "nm": 1, "lm": None}],
        },
        {
            "table": "II",
            "target": {"family": "sl_R", "N": 2},
            "recipes": [
                {"k1": "Cs", "k2": "R", "nm": 2, "lm": None},
                {"k1": "Cs", "k2": "Hs", "nm": 1, "lm": None},
                {"k1": "Cs", "k2": "Hstilde", "nm": 1, "lm": None},
                {"k1": "Cs", "k2": "Hshat", "nm": 1, "lm": None},
            ],
        },
        {
            "table": "II",
            "target": {"family": "sl_C", "N": 1},
            "recipes": [
                {"k1": "C", "k2": "Cs", "nm": 1, "lm": None},
                {"k1": "C", "k2": "Cbar", "nm": 1, "lm": None},
                {"k1": "Cs", "k2": "Cbar", "nm": 1, "lm": None},
            ],
        },
        {
            "table": "III",
            "target": {"family": "sq", "N": 1, "L": 1},
            "recipes": [{"k1": "H", "k2": "R", "nm": 1, "lm": 1}],
        },
        {
            "table": "III",
            "target": {"family": "sq", "N": 2, "L": 2},
            "recipes": [
                {"k1": "H", "k2": "R", "nm": 2, "lm": 2},
                {"k1": "H", "k2": "Hstilde", "nm": 1, "lm": 1},
            ],
        },
        {
            "table": "III",
            "target": {"family": "sq", "N": 2, "q": "n"},
            "recipes": [
                {"k1": "H", "k2": "R", "nm": 2, "lm": "n"},
                {"k1": "H", "k2": "Hshat", "nm": 1, "lm": None},
                {"k1": "Hs", "k2": "Htilde", "nm": 1, "lm": None},
            ],
        },
        {
            "table": "III",
            "target": {"family": "sp_R", "N": 2},
            "recipes": [{"k1": "Hs", "k2": "R", "nm": 1, "lm": None}],
        },
        {
            "table": "III",
            "target": {"family": "sp_R", "N": 4},
            "recipes": [
                {"k1": "Hs", "k2": "R", "nm": 2, "lm": None},
                {"k1": "H", "k2": "Htilde", "nm": 1, "lm": None},
                {"k1": "Hs", "k2": "Hstilde", "nm": 1, "lm": None},
                {"k1": "Hs", "k2": "Hshat", "nm": 1, "lm": None},
            ],
        },
        {
            "table": "III",
            "target": {"family": "sp_C", "N": 2},
            "recipes": [
                {"k1": "Cbar", "k2": "H", "nm": 1, "lm": None},
                {"k1": "Cbar", "k2": "Hs", "nm": 1, "lm": None},
            ],
        },
    ],
    "exceptional_forms": [
        {"name": "g2(-14)", "dim": 14, "character": -14, "aliases": ["g2"]},
        {"name": "g2(2)", "dim": 14, "character": 2},
        {"name": "f4(-52)", "dim": 52, "character": -52, "aliases": ["f4"]},
        {"name": "f4(-20)", "dim": 52, "character": -20},
        {"name": "f4(4)", "dim": 52, "character": 4},
        {"name": "e6(-78)", "dim": 78, "character": -78, "aliases": ["e6"]},
        {"name": "e6(-26)", "dim": 78, "character": -26},
        {"name": "e6(-14)", "dim": 78, "character": -14},
        {"name": "e6(2)", "dim": 78, "character": 2},
        {"name": "e6(6)", "dim": 78, "character": 6},
        {"name": "e7(-133)", "dim": 133, "character": -133, "aliases": ["e7"]},
        {"name": "e7(-25)", "dim": 133, "character": -25},
        {"name": "e7(-5)", "dim": 133, "character": -5},
        {"name": "e7(7)", "dim": 133, "character": 7},
        {"name": "e8(-248)", "dim": 248, "character": -248, "aliases": ["e8"]},
        {"name": "e8(-24)", "dim": 248, "character": -24},
        {"name": "e8(8)", "dim": 248, "character": 8},
    ],
}


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    out = os.path.join(here, "..", "src", "cdlie", "atlas_data.json")
    with open(out, "w") as fh:
        json.dump(DATA, fh, indent=1)
        fh.write("\n")
    print("wrote", os.path.normpath(out))


if __name__ == "__main__":
    main()
