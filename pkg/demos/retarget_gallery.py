"""
Retargeting and rotating held-out puppets
=========================================

For a few held-out frames: the reference, the driving pose's ground truth,
the synthesis, and the reference turned by 45, 90 and 180 degrees.  The
contact sheet is written to ``runs/gallery.png``.
"""
import sys
from pathlib import Path

import numpy as np

from fgtb import puppetgen
from fgtb.pipeline import synthesize_batch
from fgtb.train import Dataset, load_checkpoint

runs = Path(__file__).resolve().parents[1] / "runs"
ckpt = Path(sys.argv[1]) if len(sys.argv) > 1 else runs / "full" / "checkpoint.fgtb"
gen = load_checkpoint(ckpt).gen
data = Dataset(runs / "data" / "val")

rows = []
for i, target in [(0, 10), (0, 60), (1, 30), (1, 80)]:
    b = data.batch([(i, [0], target)])
    y, _, _ = synthesize_batch(b["x"], b["m"], b["hm"], b["hm_t"], gen)
    own = data.batch([(i, [0], 0)])
    turned = [synthesize_batch(own["x"], own["m"], own["hm"], own["hm_t"], gen, deg)[0][0] for deg in (45, 90, 180)]
    rows.append(np.concatenate([b["x"][0, 0], b["y"][0], y[0]] + turned, axis=2))

sheet = np.concatenate(rows, axis=1)
puppetgen.write_png(runs / "gallery.png", sheet)
print("columns: reference, ground truth, synthesis, turned 45 / 90 / 180; wrote", runs / "gallery.png")
