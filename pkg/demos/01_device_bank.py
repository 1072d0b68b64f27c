"""Synthetic microphones, their measured responses and the oracle conversion.

Builds a small device bank, measures every device through the impulse path of
the front end, and converts one recording from device 0 to device 1 with the
known response difference. Figures go to demos/out/.
"""
from pathlib import Path

import numpy as np

from umc.corpus import default_class_specs, render_event
from umc.devices import analytic_mel_response, fr_difference, make_synthetic_device_bank, oracle_convert, simulate_recording
from umc.frontend import extract_frequency_response, log_mel_spectrogram, make_impulse, nats_to_db
from umc.reporting import plot_device_frs
from umc.sec import plot_triptych

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

bank = make_synthetic_device_bank(4, seed=0)

# measured through an impulse recording, relative to an ideal delta, each device
# should match its filter's own mel response; bands at the log floor carry nothing
ref = extract_frequency_response(make_impulse())
live = ref > ref.min() + 1e-9
for dev in bank:
    measured = extract_frequency_response(simulate_recording(make_impulse(), dev)) - ref
    analytic = analytic_mel_response(dev.filter_taps)
    err = np.abs(nats_to_db(measured - analytic))[live]
    print(f"{dev.device_id}: mean measurement error {err.mean():.3f} dB, gain range {np.ptp(nats_to_db(analytic)):.1f} dB")
plot_device_frs(bank, OUT / "device_frs.png")

# one event recorded on device 0, converted towards device 1 by adding the difference
wave = render_event(default_class_specs(4)[2], seed=11)
x0 = log_mel_spectrogram(simulate_recording(wave, bank[0]))
x1 = log_mel_spectrogram(simulate_recording(wave, bank[1]))
y = oracle_convert(x0, fr_difference(bank[0], bank[1]))
print(f"L1 to the real device-1 recording: unconverted {np.abs(x0 - x1).mean():.3f}, oracle {np.abs(y - x1).mean():.3f}")
plot_triptych(x0, y, x1, OUT / "oracle_triptych.png", titles=("device 0", "oracle conversion", "device 1"))
