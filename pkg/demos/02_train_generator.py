"""Train the unified generator for a few minutes and compare it with the oracle.

A short run on a 3-device corpus. The ratio printed at the end is the mean L1
between generator output and the oracle target, relative to leaving the input
unconverted; below 1 means the generator moved towards the target device.
Pass a budget in seconds as the first argument (default 300).
"""
import sys
from pathlib import Path

import numpy as np

from umc.corpus import synth_corpus
from umc.devices import fr_difference, make_synthetic_device_bank, oracle_convert
from umc.network import DiscriminatorConfig, GeneratorConfig
from umc.sec import plot_triptych
from umc.training import MCTrainConfig, TrainSchedule, convert, train

OUT = Path(__file__).parent / "out"
budget = float(sys.argv[1]) if len(sys.argv) > 1 else 300.0

bank = make_synthetic_device_bank(3, seed=0)
corpus = synth_corpus(6, 60, bank, seed=0)
cfg = MCTrainConfig(
    generator=GeneratorConfig.desk(),
    discriminator=DiscriminatorConfig.desk(),
    schedule=TrainSchedule(epochs=1000, steps_per_epoch=50, decay_every=1000),
)
res = train(cfg, corpus, run_dir=OUT / "mc_demo", time_budget=budget)
print(f"{len(res.step_metrics)} steps")

x, _ = corpus.stack("val", 0)
for b in (1, 2):
    d = fr_difference(bank[0], bank[b])
    target = oracle_convert(x, d)
    y = convert(res.models.generator, x, np.tile(d, (len(x), 1)))
    ratio = np.abs(y - target).mean() / np.abs(x - target).mean()
    print(f"device 0 -> {b}: L1 ratio to oracle {ratio:.3f}")
plot_triptych(x[0], y[0], target[0], OUT / "generator_triptych.png")
