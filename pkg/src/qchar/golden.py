"""Golden-file corpus: named CLI pipelines whose outputs are stored under ``fixtures/``."""

from __future__ import annotations

import io

from .cli import main

KR_FOLD_4 = [["kr", "--infinite", "--i", "0", "--k", "1", "--depth", "4"], ["fold", "--n", "3"]]
MINAFF = ["generate", "--cartan", "infinite", "--highest", "Y[0,0] Y[2,4]", "--depth", "8"]

CORPUS: dict[str, list[list[str]]] = {
    "kr_rank_one_window.txt": [["kr", "--infinite", "--i", "0", "--k", "1", "--window", "0", "--format", "text"]],
    "kr_i0_k1_window1.json": [["kr", "--infinite", "--i", "0", "--k", "1", "--window", "1"]],
    "kr_i0_k2_window1.json": [["kr", "--infinite", "--i", "0", "--k", "2", "--window", "1"]],
    "kr_i0_k1_depth4.json": KR_FOLD_4[:1],
    "fold_i0_k1_depth4_n3.json": KR_FOLD_4,
    "fold_i0_k1_depth4_n3.txt": [KR_FOLD_4[0], ["fold", "--n", "3", "--format", "text"]],
    "fold_i0_k1_depth4_n3.tex": [KR_FOLD_4[0], ["fold", "--n", "3", "--format", "latex"]],
    "fold_i0_k1_depth4_n3_dominants.json": KR_FOLD_4 + [["dominants"]],
    "fold_i0_k1_depth4_n3_weights.txt": KR_FOLD_4 + [["weights", "--format", "text"]],
    "fold_i0_k1_depth4_n3_verify.json": KR_FOLD_4 + [["verify", "--frontier", "2"]],
    "minaff_window_depth8.json": [["generate", "--cartan", "window:-3:5", "--highest", "Y[0,0] Y[2,4]", "--depth", "8"]],
    "minaff_fold_n3_dominants.txt": [MINAFF, ["fold", "--n", "3"], ["dominants", "--format", "text"]],
    "minaff_cyclic_generation_failure.json": [
        ["generate", "--cartan", "cyclic:3", "--highest", "Y[0,0] Y[2,4]", "--depth", "6", "--experimental"]],
    "fold_i0_k1_depth8_n3_weights.txt": [["kr", "--infinite", "--i", "0", "--k", "1", "--depth", "8"],
                                         ["fold", "--n", "3"], ["weights", "--format", "text"]],
}


def run_pipeline(stages: list[list[str]]) -> tuple[str, int]:
    """Feed each stage's stdout to the next; return the last output and exit code."""
    data = ""
    code = 0
    for argv in stages:
        out = io.StringIO()
        err = io.StringIO()
        code = main(argv, stdin=io.StringIO(data), stdout=out, stderr=err)
        data = out.getvalue() or err.getvalue()
    return data, code
