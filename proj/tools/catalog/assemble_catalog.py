#!/usr/bin/env python3
"""Assemble data/catalog.json from refined entries and curated metadata.

    python3 tools/catalog/assemble_catalog.py REFINED_DIR > data/catalog.json

REFINED_DIR holds one JSON file per group as written by refine_catalog
(simple and symmetric groups), lift_cover (covers) or extend_presentation
(G2(2) over U3(3)). tools/catalog/refined/ is the set used for the shipped
catalog.
"""

import json
import os
import sys

ATLAS = "ATLAS of Finite Groups (Conway et al., 1985)"

# name: (aliases, tier, simple, mult, out, automorphism group, construction)
META = {
    "A5": (["L2(4)", "L2(5)"], "core", True, [2], 2, "S5", "natural action on 5 points"),
    "A6": (["L2(9)"], "core", True, [6], 4, None, "natural action on 6 points"),
    "A7": ([], "core", True, [6], 2, "S7", "natural action on 7 points"),
    "A8": (["L4(2)"], "core", True, [2], 2, "S8", "natural action on 8 points"),
    "S5": ([], "core", False, [2], 1, "S5", "natural action on 5 points"),
    "S6": ([], "core", False, [2], 2, None, "natural action on 6 points"),
    "S7": ([], "core", False, [2], 1, "S7", "natural action on 7 points"),
    "S8": ([], "core", False, [2], 1, "S8", "natural action on 8 points"),
    "L3(2)": (["L2(7)"], "core", True, [2], 2, "PGL2(7)",
              "PSL(2,7) acting on the projective line over F7"),
    "PGL2(7)": (["Aut(L3(2))"], "core", False, [2], 1, "PGL2(7)",
                "PGL(2,7) acting on the projective line over F7"),
    "L2(8)": ([], "core", True, [], 3, None, "PSL(2,8) acting on the projective line over F8"),
    "L2(11)": ([], "core", True, [2], 2, "PGL2(11)",
               "PSL(2,11) acting on the projective line over F11"),
    "PGL2(11)": (["Aut(L2(11))"], "core", False, [2], 1, "PGL2(11)",
                 "PGL(2,11) acting on the projective line over F11"),
    "U3(3)": (["G2(2)'"], "core", True, [], 2, "G2(2)",
              "PSU(3,3) acting on the 28 isotropic points of the Hermitian form over F9"),
    "G2(2)": (["Aut(U3(3))"], "core", False, None, 1, "G2(2)",
              "PSU(3,3) extended by the field automorphism, on the same 28 points"),
    "M11": ([], "core", True, [], 1, "M11", "standard generators on 11 points"),
    "M12": ([], "core", True, [2], 2, None, "M11 generators plus the inversion x -> -1/x on 12 points"),
    "SL2(5)": (["2.A5"], "core", False, [], 2, None, "SL(2,5) acting on the 24 nonzero vectors of F5^2"),
    "SL2(7)": (["2.L3(2)"], "core", False, [], 2, None, "SL(2,7) acting on the 48 nonzero vectors of F7^2"),
    "SL2(11)": (["2.L2(11)"], "core", False, [], 2, None,
                "SL(2,11) acting on the 120 nonzero vectors of F11^2"),
    "2.A6": (["SL2(9)"], "core", False, [3], 4, None,
             "SL(2,9) acting on the 80 nonzero vectors of F9^2; a double cover, not universal"),
    "2.M12": ([], "stretch", False, [], 2, None,
              "monomial action of M12 on the extended ternary Golay code, on 24 signed coordinates"),
}

ORDERS = {
    "A5": 60, "A6": 360, "A7": 2520, "A8": 20160, "S5": 120, "S6": 720, "S7": 5040,
    "S8": 40320, "L3(2)": 168, "PGL2(7)": 336, "L2(8)": 504, "L2(11)": 660,
    "PGL2(11)": 1320, "U3(3)": 6048, "G2(2)": 12096, "M11": 7920, "M12": 95040,
    "SL2(5)": 120, "SL2(7)": 336, "SL2(11)": 1320, "2.A6": 720, "2.M12": 190080,
}

ALTERNATES = {
    "A5": [{"generators": ["(1,2)(3,4)", "(1,3,5)"], "relators": ["a^2", "b^3", "(a*b)^5"],
            "provenance": "(2,3,5) triangle presentation"}],
}


def main():
    src = sys.argv[1]
    groups = []
    for name in ORDERS:
        path = os.path.join(src, name + ".json")
        if not os.path.exists(path) or os.path.getsize(path) == 0:
            print(f"skipping {name}: no refined entry", file=sys.stderr)
            continue
        with open(path) as f:
            refined = json.load(f)[name]
        aliases, tier, simple, mult, out, aut, construction = META[name]
        lifted = "cover_of" in refined
        e = {
            "name": name,
            "aliases": aliases,
            "order": ORDERS[name],
            "degree": refined["degree"],
            "generators": refined["generators"],
            "presentation": {
                "relators": refined["relators"],
                "provenance": refined.get("presentation_provenance") or
                              ("quotient relators lifted through the central involution; "
                               "certified by coset enumeration" if lifted else
                               "power relators of short words, found by search and pruned; "
                               "certified by coset enumeration"),
            },
            "mult": mult,
            "mult_provenance": ATLAS if mult is not None else "not recorded",
            "out_order": out,
            "out_provenance": ATLAS,
            "simple": simple,
            "tier": tier,
            "provenance": construction + "; generating pair chosen by tools/catalog",
        }
        if name in ALTERNATES:
            e["alternate_presentations"] = ALTERNATES[name]
        if lifted:
            e["cover_of"] = refined["cover_of"]
        if aut:
            e["automorphism_group"] = aut
        groups.append(e)
    json.dump({"schema_version": 1, "groups": groups}, sys.stdout, indent=1)
    print()


if __name__ == "__main__":
    main()
