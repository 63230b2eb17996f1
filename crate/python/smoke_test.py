#!/usr/bin/env python3
"""Smoke test for the pygaltab extension module.

Build the extension first:

    cargo build -p galtab-py            # or --release

then run:

    python3 python/smoke_test.py
"""

import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / "debug" / "libpygaltab.so",
        ROOT / "target" / "release" / "libpygaltab.so",
    ]
    built = [p for p in candidates if p.exists()]
    if not built:
        sys.exit("libpygaltab.so not found; run `cargo build -p galtab-py` first")
    newest = max(built, key=lambda p: p.stat().st_mtime)
    stage = Path(tempfile.mkdtemp(prefix="pygaltab."))
    shutil.copy2(newest, stage / "pygaltab.so")
    sys.path.insert(0, str(stage))
    import pygaltab

    return pygaltab


def check(label, condition):
    status = "ok" if condition else "FAIL"
    print(f"{label}: {status}")
    if not condition:
        raise SystemExit(f"smoke test failed at: {label}")


def main():
    g = load_module()

    # exact cyclotomic arithmetic and the golden-ratio conjugates
    one = g.CycNumber.integer(5, 1)
    plus = one + g.CycNumber.root_of_unity(5, 1) + g.CycNumber.root_of_unity(5, 4)
    minus = one + g.CycNumber.root_of_unity(5, 2) + g.CycNumber.root_of_unity(5, 3)
    re_plus, im_plus = plus.to_complex()
    check("1 + z + z^4 evaluates to the golden ratio", abs(re_plus - 1.6180339887) < 1e-9 and abs(im_plus) < 1e-12)
    check("conjugate product is exactly -1", plus * minus == g.CycNumber.integer(5, -1))
    check("sigma_2 swaps the conjugates", plus.galois(2) == minus)
    check("classification", (plus.classify(), g.CycNumber.parse("1/2 @4").classify())
          == ("cyclotomic_integer", "rational"))
    check("grammar round trip", g.CycNumber.parse(str(plus)) == plus)

    # groups and character tables
    s3 = g.Group.builtin("S3")
    check("S3 order and classes", s3.order() == 6 and s3.class_sizes() == [1, 3, 2])
    t3 = s3.character_table()
    check("S3 golden table", t3.rows() == [["1", "1", "1"], ["1", "-1", "1"], ["2", "0", "-1"]])
    check("S3 table verifies", all(passed for _, passed, _ in t3.verify()))

    a5 = g.Group.builtin("A5")
    t5 = a5.character_table()
    check("A5 degrees", t5.degrees() == [1, 3, 3, 4, 5])
    check("A5 rows span the class functions", t5.spans_class_functions())
    compatible, row_perm, col_perm = t5.verify_compatibility(7)
    check("A5 galois compatibility at ell=7",
          compatible and row_perm == [0, 2, 1, 3, 4] and col_perm == [0, 1, 2, 4, 3])
    row_orbits, col_orbits, field_degrees = t5.galois_orbits()
    check("A5 galois orbits", row_orbits == [[0], [1, 2], [3], [4]] and col_orbits[-1] == [3, 4])
    value = t5.entry(1, 3)
    check("A5 golden entry is exact", value == plus.embed(30) or value == minus.embed(30))

    # commuting pairs, SL2 orbits, braid machinery
    check("S3 pair classes", s3.pair_class_count() == 8 == s3.pair_class_count_oracle())
    check("A5 pair classes", a5.pair_class_count() == 22 == a5.pair_class_count_oracle())
    check("center square acts trivially", s3.center_acts_trivially() and a5.center_acts_trivially())
    check("braid word on a pair", s3.braid_pair("s1", "(1 2 3)", "(1 2)") == ("(1 2 3)", "(2 3)"))
    check("collapse", s3.collapse("(1 2)", "()", "(1 2 3)") == ("(1 2)", "(1 3 2)"))
    check("tuple classes of Z2", g.Group.builtin("Z2").tuple_classes(2) == 3)

    # profinite actions and covers
    z12 = g.Group.builtin("Z12")
    gen = z12.elements()[1]
    check("profinite power map", z12.profinite_power(12, 7, gen) == z12.elements()[7])
    cyc = g.CyclicCover(5)
    check("cyclic deck conjugation", cyc.galois_on_deck(2, 1) == 2)
    dih = g.DihedralCover(3)
    check("dihedral fiber size", len(dih.fiber()) == 6)
    check("dihedral deck conjugation", dih.galois_on_deck(5, 1, 1) == (1, 2))
    rows = dih.compare_actions(5)
    moved = {deck: differs for deck, _, _, differs in rows}
    check("covering vs power action differ on a reflection", moved[(-1, 1)] and not moved[(1, 0)])
    check("hom count", g.hom_count(a5) == 60)

    # the CLI through Python
    code, stdout, stderr = g.run_command(["pairs", "S3"])
    check("cli pairs", code == 0 and "pair_classes=8" in stdout and stderr == "")
    code2, stdout2, _ = g.run_command(["pairs", "S3"])
    check("cli byte determinism", stdout == stdout2 and code2 == 0)
    code, _, stderr = g.run_command(["table", "S99"])
    check("cli domain error", code == 1 and "out of supported range" in stderr)

    print("all smoke checks passed")


if __name__ == "__main__":
    main()
