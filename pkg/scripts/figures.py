"""Render the figure families to SVG.

    python3 scripts/figures.py --out figures/
"""

from __future__ import annotations

import argparse
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from exactquad.forms import StandardForm, expand_standard
from exactquad.plot import plot_overlay, plot_quadratic
from exactquad.transform import Transformation, standard_to_transformation


@dataclass(frozen=True)
class FigureConfig:
    out: Path = Path("figures")
    samples: int = 256


def wave_overlay(cfg: FigureConfig) -> str:
    tr = Transformation(3, math.pi, math.pi / 2, 2)
    ts = [-2 * math.pi + 4 * math.pi * i / (cfg.samples - 1) for i in range(cfg.samples)]
    parent = [(t, math.sin(t)) for t in ts]
    landmarks = [(-math.pi / 2, -1.0), (math.pi / 2, 1.0)]
    return plot_overlay(tr, parent, landmarks, center=(0.0, 0.0))


def parabola_overlay(cfg: FigureConfig) -> str:
    sf = StandardForm(Fraction(1, 2), 2, -3)
    tr = standard_to_transformation(sf)
    ts = [-3 + 6 * i / (cfg.samples - 1) for i in range(cfg.samples)]
    return plot_overlay(tr, [(t, t * t) for t in ts], landmarks=[(0, 0), (-1, 1), (1, 1)])


CASES = {
    "pos_a_neg_k": StandardForm(1, 1, -2),
    "pos_a_zero_k": StandardForm(1, 1, 0),
    "pos_a_pos_k": StandardForm(1, 1, 2),
    "neg_a_pos_k": StandardForm(-1, 1, 2),
    "neg_a_zero_k": StandardForm(-1, 1, 0),
    "neg_a_neg_k": StandardForm(-1, 1, -2),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=FigureConfig.out)
    ap.add_argument("--samples", type=int, default=FigureConfig.samples)
    args = ap.parse_args()
    cfg = FigureConfig(args.out, args.samples)
    cfg.out.mkdir(parents=True, exist_ok=True)
    docs = {"wave_overlay": wave_overlay(cfg), "parabola_overlay": parabola_overlay(cfg)}
    for name, sf in CASES.items():
        docs[f"case_{name}"] = plot_quadratic(expand_standard(sf), cfg.samples)
    for name, svg in docs.items():
        path = cfg.out / f"{name}.svg"
        path.write_text(svg, encoding="utf-8")
        print(f"wrote {path} ({len(svg)} bytes)")


if __name__ == "__main__":
    main()
