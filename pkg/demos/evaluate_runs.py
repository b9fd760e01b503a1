"""
Held-out metrics for the trained runs
=====================================

Scores the full model with one, two and three references and both ablations
with one, then writes everything to ``runs/report.json``.
"""
import json
from pathlib import Path

from fgtb.train import Protocol, evaluate

runs = Path(__file__).resolve().parents[1] / "runs"
val = runs / "data" / "val"

rows = []
for name, n_refs in [("full", 1), ("full", 2), ("full", 3), ("no_skip_warp", 1), ("no_rot_loss", 1)]:
    ckpt = runs / name / "checkpoint.fgtb"
    if not ckpt.exists():
        print("skipping", name, "(no checkpoint)")
        continue
    rep = evaluate(ckpt, val, Protocol(n_refs=n_refs))
    rep.pop("frames")
    rows.append({"run": name, "n_refs": n_refs, **rep})
    print(f"{name:<14} N={n_refs}  SSIM {rep['SSIM']:.4f}  L1 {rep['L1']:.4f}  PSNR {rep['PSNR']:.2f}  "
          f"IoU {rep['IoU']:.4f}  SSIM_full {rep['SSIM_full']:.4f}")

cross = evaluate(runs / "full" / "checkpoint.fgtb", val, Protocol(same_identity=False))
cross.pop("frames")
rows.append({"run": "full", "n_refs": 1, "cross_identity": True, **cross})
print(f"{'full (cross)':<14} N=1  SSIM {cross['SSIM']:.4f}  L1 {cross['L1']:.4f}  IoU {cross['IoU']:.4f}")

(runs / "report.json").write_text(json.dumps(rows, indent=1))
