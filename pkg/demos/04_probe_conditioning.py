"""Where does the generator carry target-device information?

Probes the activations of a trained desk generator (from the acceptance cache)
and of a freshly initialised one. Each probe predicts the target device from a
pooled statistic of one layer; the MI estimate is H(y) minus the probe's
cross-entropy in nats.
"""
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))
from desk import DeskSettings, desk_corpus, desk_generator  # noqa: E402

from umc.network import GeneratorConfig, UnifiedGenerator  # noqa: E402
from umc.probe import plot_probe, probe_network, write_probe_csv  # noqa: E402

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)
s = DeskSettings()
corpus = desk_corpus(0, s)
trained, _, _ = desk_generator(0, corpus, s)

xs, src = [], []
for i in range(len(corpus.bank)):
    x, _ = corpus.stack("val", i)
    xs.append(x[:40])
    src += [i] * len(x[:40])
x = np.concatenate(xs)

for name, gen in (("trained", trained), ("untrained", UnifiedGenerator(GeneratorConfig.desk()))):
    res = probe_network(gen, x, src, corpus.bank, axes=("channel",))
    print(f"\n{name}")
    for r in res:
        print(f"  {r.layer_tag:16s} MI {r.mi_estimate:+.3f} nats  acc {r.accuracy:.2f}")
    write_probe_csv(res, OUT / f"probe_{name}.csv")
    plot_probe(res, OUT / f"probe_{name}.png")
