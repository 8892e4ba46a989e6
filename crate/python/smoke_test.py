#!/usr/bin/env python3
"""Smoke test for the sparsegeom_py extension module.

Build the module first:

    cargo build -p sparsegeom-py

then run this script from anywhere inside the repository.
"""

import importlib.util
import json
import pathlib
import shutil
import sys
import tempfile


def load_module():
    root = pathlib.Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / profile / name
        for profile in ("debug", "release")
        for name in ("libsparsegeom_py.so", "sparsegeom_py.so", "libsparsegeom_py.dylib")
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("extension not found; run `cargo build -p sparsegeom-py` first")
    tmp = pathlib.Path(tempfile.mkdtemp())
    target = tmp / "sparsegeom_py.so"
    shutil.copy2(built, target)
    spec = importlib.util.spec_from_file_location("sparsegeom_py", target)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def main():
    sg = load_module()

    # parameter normalization
    assert sg.normalize_params(2, 4, 6, 2) == (1, 2, 3, 1)
    try:
        sg.normalize_params(1, 1, 1, 4)
    except ValueError:
        pass
    else:
        raise AssertionError("invalid parameters were accepted")

    # the three-incidence example: sparse but not tight, 4 pebbles left
    example1 = json.dumps(
        {
            "points": ["p1", "p2"],
            "lines": ["l1", "l2"],
            "incidences": [["p1", "l1"], ["p1", "l2"], ["p2", "l1"]],
        }
    )
    verdict = json.loads(sg.check(example1, 2, 2, 3, 3))
    assert verdict["status"] == "sparse", verdict
    assert verdict["remaining_pebbles"] == 4, verdict

    # engine and oracle agree
    oracle = json.loads(sg.oracle_check(example1, 2, 2, 3, 3))
    assert oracle["status"] == verdict["status"]

    # extraction keeps everything on an already sparse instance
    extracted = json.loads(sg.extract(example1, 1, 2, 2))
    assert len(extracted["accepted"]) == 3, extracted
    assert len(sg.max_sparse_subset(example1, 1, 1, 2, 2)) == 3

    # triangle graph reduces to a (2,2,3,3)-tight geometry
    triangle = json.dumps(
        {"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"], ["a", "c"]]}
    )
    assert sg.derive_hypergraph_params(2, 3, 2) == (2, 2, 3, 3)
    reduced = sg.convert_hypergraph(triangle)
    tri_verdict = json.loads(sg.check(reduced, 2, 2, 3, 3))
    assert tri_verdict["status"] == "tight", tri_verdict

    # K4 is not (2,3)-sparse: expect a witness
    k4_edges = [["a", "b"], ["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"], ["c", "d"]]
    k4 = sg.convert_hypergraph(
        json.dumps({"vertices": ["a", "b", "c", "d"], "edges": k4_edges})
    )
    k4_verdict = json.loads(sg.check(k4, 2, 2, 3, 3))
    assert k4_verdict["status"] == "not-sparse", k4_verdict
    assert k4_verdict["witness"]["deficit"] >= 1

    # generated tight geometries verify as tight
    tight = sg.generate_tight(1, 2, 2, 3, 2)
    assert json.loads(sg.check(tight, 1, 1, 2, 2))["status"] == "tight"

    # random generation is seed-deterministic
    assert sg.random_geometry(4, 4, 0.5, 7) == sg.random_geometry(4, 4, 0.5, 7)

    # the two K4-minus-an-edge tight sets violate basis exchange
    def wheel(diagonal):
        edges = [["v1", "v2"], ["v2", "v3"], ["v3", "v4"], ["v1", "v4"], diagonal]
        return sg.convert_hypergraph(
            json.dumps({"vertices": ["v1", "v2", "v3", "v4"], "edges": edges})
        )

    report = json.loads(
        sg.verify_matroid_pair(wheel(["v1", "v3"]), wheel(["v2", "v4"]), 2, 2, 3, 3)
    )
    assert report["exchange_violations"], report

    print("smoke test: all checks passed")


if __name__ == "__main__":
    main()
