"""Device-mismatch study: event classifiers with and without converted training data.

Reuses the cached desk-scale experiment of the acceptance tests (trained on
first use, which takes over an hour per seed on one CPU). For each seed it
prints the macro-F1 of every (source, target) pair and the mismatched mean for
the four augmentation modes.
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))
from desk import DeskSettings, conversion_ratio, desk_corpus, desk_generator, sec_reports  # noqa: E402

from umc.reporting import summary_table  # noqa: E402

seeds = [int(a) for a in sys.argv[1:]] or [0]
s = DeskSettings()
for seed in seeds:
    corpus = desk_corpus(seed, s)
    gen, seconds, steps = desk_generator(seed, corpus, s)
    print(f"seed {seed}: generator {steps} steps in {seconds / 60:.1f} min, oracle L1 ratio {conversion_ratio(gen, corpus):.3f}")
    reports, _ = sec_reports(seed, corpus, gen, s)
    for mode, rep in reports.items():
        print(f"\n[{mode}]")
        print(rep.render_table())
    print("\n" + summary_table(reports))
