"""Rewrite every golden file under fixtures/ from the current code."""

from pathlib import Path

from qchar.golden import CORPUS, run_pipeline

ROOT = Path(__file__).resolve().parents[1] / "fixtures"


def main():
    ROOT.mkdir(exist_ok=True)
    for name, stages in sorted(CORPUS.items()):
        text, code = run_pipeline(stages)
        (ROOT / name).write_text(text, encoding="utf-8")
        print(f"{name}: exit {code}, {len(text)} bytes")


if __name__ == "__main__":
    main()
