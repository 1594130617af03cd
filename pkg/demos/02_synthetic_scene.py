"""Synthetic data walkthrough: scene generation and raw-press preprocessing.

Creates the oracle scene a training run consumes, then simulates the
sensor-capture path (raw 240x320 press frames) and preprocesses it into the
same dataset layout.
"""

from pathlib import Path

import numpy as np

from vts.preprocess import preprocess_raw_dataset
from vts.records import load_manifest
from vts.synthgen import default_scene_spec, make_raw_press_dataset, write_scene

out = Path(__file__).parent / "out" / "data"

# Route one: a fully known scene.  Patches carry ground-truth slope fields,
# and --dense-gt style storage keeps the full field for evaluation.
spec = default_scene_spec(size=128, name="demo-garment")
scene_dir = write_scene(spec, out / "scene", n_patches=30, seed=0, include_dense_gt=True)
scene = load_manifest(scene_dir)
print(f"scene '{scene.object_id}': {scene.image_size} px, {len(scene.patches)} patches")
print(f"gradient_max {scene.gradient_max:.3f} (physical slopes are stored normalized by this)")
coverages = [p.contact_mask.mean() for p in scene.patches]
print(f"patch contact coverage: min {min(coverages):.2f} (rule: >= 0.90)")

# Route two: the capture path.  Raw presses are full sensor frames; the
# preprocessor thresholds contact, downsamples, samples patches, and derives
# the object mask from the sketch contour.
raw_dir = out / "raw"
dataset_dir = out / "dataset"
make_raw_press_dataset(raw_dir, n_presses=3, seed=1)
preprocess_raw_dataset(raw_dir, dataset_dir, patches_per_press=8, seed=1)
processed = load_manifest(dataset_dir)
print(f"preprocessed capture: {len(processed.patches)} patches from 3 presses")

# Both routes produce the identical manifest layout, so the trainer does not
# care which one fed it.
names = sorted(p.name for p in dataset_dir.iterdir())
print(f"dataset layout: {names[:4]} ... ({len(names)} entries)")
rng = np.random.default_rng(0)
sample = processed.patches[int(rng.integers(len(processed.patches)))]
print(f"example patch {sample.id}: bbox {sample.bbox}, slope range "
      f"[{sample.grad.gx.min():.2f}, {sample.grad.gx.max():.2f}]")
