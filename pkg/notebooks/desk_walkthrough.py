# %% [markdown]
# # Desk experiment walkthrough
#
# Loads the cached artifacts of `downscale run --output-root runs` (seed 42,
# 128x128 HR domain, 2000 six-hourly timestamps) and looks at where each model
# stands. Nothing is trained here; a missing stage raises MissingCheckpointError.
#
#     python3 notebooks/desk_walkthrough.py [output_root]

# %%
import sys

import matplotlib

matplotlib.use("Agg")
import numpy as np

from downscale.config import ExperimentConfig
from downscale.data.interpolation import upsample_nearest
from downscale.experiment import Experiment
from downscale.unet import predict_archive

root = sys.argv[1] if len(sys.argv) > 1 else "runs"
exp = Experiment(ExperimentConfig(output_root=root))
test = exp.eval_archive()
print(f"run key {exp.run_key}, {len(test)} test timestamps, HR {test.targets.shape[-2:]}")

# %% [markdown]
# ## Scores
# BIAS is the spatial mean of prediction minus truth per timestamp; the last
# column averages its absolute value over time.

# %%
reports = {m: exp.evaluate(m) for m in ("interp", "unet", "ldm_res")}
print(f"{'model':10s} {'RMSE':>7s} {'BIAS':>7s} {'|BIAS|':>7s} {'R2':>6s} {'PCC':>6s} {'HF power':>9s}")
for m, rep in reports.items():
    hp, ht = rep.high_frequency_power()
    print(f"{rep.name:10s} {rep.metrics.mean('rmse'):7.3f} {rep.metrics.mean('bias'):7.3f} "
          f"{np.mean(np.abs(rep.metrics.bias)):7.3f} {rep.metrics.mean('r2'):6.3f} "
          f"{rep.metrics.mean('pcc'):6.3f} {hp:9.4f}")
print(f"truth HF power {ht:.4f}")

# %% [markdown]
# ## What the diffusion stage has to learn
# The residual left by the UNET is much smaller than the error of plain
# nearest-neighbour upsampling, and most of it sits at short wavelengths.

# %%
k = test.predictor_names.index("t2m")
nearest = upsample_nearest(test.predictors[:, k:k + 1], 8)
unet = predict_archive(test, exp.unet(train=False))
print(f"std(truth - nearest) {np.std(test.targets - nearest):.3f} K, "
      f"std(truth - UNET) {np.std(test.targets - unet):.3f} K")

# %% [markdown]
# ## Stage attribution
# Per-bin spectral error of the VAE round trip of the true residual versus the
# full LDM. Negative diffusion error means the sampled fields carry power the
# decoder of the encoded truth does not.

# %%
contrib = exp.contribution()
s = contrib.vae_report.spectra
for i in range(0, len(s.truth.radii), 8):
    print(f"{s.truth.wavelengths[i]:7.1f} km  decompression {contrib.decompression_error[i]:.3f}  "
          f"diffusion {contrib.diffusion_error[i]:+.3f}")
print("VAE round trip at least as faithful in every bin:", contrib.ordering_holds)

# %% [markdown]
# ## Residual versus direct LDM

# %%
cmp = exp.ablation()
print(f"residual LDM closer to truth in {cmp.residual_closer_bins} of {cmp.n_bins} spectral bins")

# %%
for path in exp.figures(["interp", "unet", "ldm_res"]):
    print(path)
