"""Service walkthrough: register a model, post a sketch, decode every artifact.

Uses the in-process test client, so no port is opened; `vts serve --models
<dir>` exposes the identical app over HTTP for the browser editor.
"""

from pathlib import Path

from fastapi.testclient import TestClient

from vts import imgio
from vts.records import load_manifest
from vts.service import ModelRegistry, create_app
from vts.synthgen import default_scene_spec, write_scene
from vts.training import TrainConfig, train

out = Path(__file__).parent / "out"
scene_dir = out / "data" / "scene"
ckpt = out / "run" / "checkpoint.zip"
if not (scene_dir / "manifest.json").exists():
    write_scene(default_scene_spec(size=128, name="demo-garment"),
                scene_dir, n_patches=30, seed=0, include_dense_gt=True)
if not ckpt.exists():
    print("no checkpoint from the training demo; running 10 quick iterations")
    ckpt, _ = train(TrainConfig(iterations=10, crop_size=128, checkpoint_every=0),
                    scene_dir, out / "run")

registry = ModelRegistry()
registry.register("demo-garment", ckpt)
client = TestClient(create_app(registry=registry))

print("GET /healthz ->", client.get("/healthz").json())
print("GET /api/v1/models ->", client.get("/api/v1/models").json())

scene = load_manifest(scene_dir)
sketch_b64 = imgio.to_base64(imgio.encode_png_bytes(scene.sketch))
response = client.post("/api/v1/synthesize", json={
    "model_id": "demo-garment",
    "sketch": {"data": sketch_b64, "content_type": "image/png"},
    "options": {"device_size": [640, 400]},
})
body = response.json()
print(f"POST /api/v1/synthesize -> {response.status_code} in {body['elapsed_s']} s")

art_dir = out / "service_artifacts"
art_dir.mkdir(parents=True, exist_ok=True)
for name, artifact in body["artifacts"].items():
    raw = imgio.from_base64(artifact["data"])
    (art_dir / f"{name}.png").write_bytes(raw)
    extras = {k: round(v, 3) for k, v in artifact.items()
              if k not in ("data", "content_type")}
    print(f"  {name}: {len(raw)} bytes {extras or ''}")
print(f"decoded artifacts in {art_dir}")

# The 16-bit channels ship their value ranges so clients can reconstruct
# physical slopes: value = gmin + code/65535 * (gmax - gmin).
gx_meta = body["artifacts"]["tactile_gx"]
print(f"tactile_gx spans [{gx_meta['gmin']:.3f}, {gx_meta['gmax']:.3f}]")
