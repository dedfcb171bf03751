"""Synthetic RESP and ECG corpora with controlled stress manipulations."""

from .generators import (
    CONDITIONS,
    beat_times,
    gen_ecg,
    gen_resp,
    generate_corpus,
    generate_subject,
    pqrst_template,
    render_beats,
    template_peak,
)
from .models import SignalParams, SynthSpec

__all__ = [
    "CONDITIONS",
    "SignalParams",
    "SynthSpec",
    "beat_times",
    "gen_ecg",
    "gen_resp",
    "generate_corpus",
    "generate_subject",
    "pqrst_template",
    "render_beats",
    "template_peak",
]
