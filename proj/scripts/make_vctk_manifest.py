#!/usr/bin/env python3
# Copyright 2026 The NVSR Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Builds an nvsr manifest from a local VCTK 0.92 copy.

Only mic1 recordings are used and speakers p280 and p315 are dropped. The
test split is the last eight remaining speakers. FLAC files are decoded
(requires the `soundfile` package), resampled to 44.1 kHz and written as
float WAV under --out-dir; the manifest lists paths relative to itself.

    python scripts/make_vctk_manifest.py --vctk-root VCTK-Corpus-0.92 \
        --out-dir data/vctk44k --manifest data/vctk44k/test.txt
"""

import argparse
import pathlib
import sys

import numpy as np
from scipy.io import wavfile
from scipy.signal import resample_poly

TEST_SPEAKERS = ("p360", "p361", "p362", "p363", "p364", "p374", "p376", "s5")
EXCLUDED_SPEAKERS = ("p280", "p315")
TARGET_RATE = 44100


def find_audio_root(root: pathlib.Path) -> pathlib.Path:
    for name in ("wav48_silence_trimmed", "wav48"):
        if (root / name).is_dir():
            return root / name
    return root


def mic1_files(speaker_dir: pathlib.Path):
    files = sorted(speaker_dir.glob("*_mic1.flac")) or sorted(speaker_dir.glob("*_mic1.wav"))
    if not files:
        # VCTK 0.80 ships a single microphone as plain WAV.
        files = sorted(speaker_dir.glob("*.wav"))
    return files


def load(path: pathlib.Path):
    if path.suffix == ".flac":
        try:
            import soundfile
        except ImportError:
            sys.exit("decoding FLAC needs the soundfile package (pip install soundfile)")
        audio, rate = soundfile.read(str(path), dtype="float64", always_2d=True)
        return audio.mean(axis=1), rate
    rate, audio = wavfile.read(str(path))
    if audio.dtype == np.int16:
        audio = audio / 32768.0
    audio = np.asarray(audio, dtype=np.float64)
    if audio.ndim == 2:
        audio = audio.mean(axis=1)
    return audio, rate


def convert(src: pathlib.Path, dst: pathlib.Path) -> None:
    audio, rate = load(src)
    if rate != TARGET_RATE:
        g = np.gcd(rate, TARGET_RATE)
        audio = resample_poly(audio, TARGET_RATE // g, rate // g)
    dst.parent.mkdir(parents=True, exist_ok=True)
    wavfile.write(str(dst), TARGET_RATE, audio.astype(np.float32))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--vctk-root", type=pathlib.Path, required=True)
    parser.add_argument("--out-dir", type=pathlib.Path, required=True)
    parser.add_argument("--manifest", type=pathlib.Path, required=True)
    parser.add_argument("--include-train", action="store_true",
                        help="also convert and list the training speakers")
    args = parser.parse_args()

    audio_root = find_audio_root(args.vctk_root)
    speakers = sorted(p.name for p in audio_root.iterdir()
                      if p.is_dir() and p.name not in EXCLUDED_SPEAKERS)
    missing = [s for s in TEST_SPEAKERS if s not in speakers]
    if missing:
        print(f"warning: test speakers not found: {', '.join(missing)}", file=sys.stderr)

    manifest_dir = args.manifest.resolve().parent
    lines = []
    for speaker in speakers:
        split = "test" if speaker in TEST_SPEAKERS else "train"
        if split == "train" and not args.include_train:
            continue
        for src in mic1_files(audio_root / speaker):
            dst = (args.out_dir / speaker / src.name).with_suffix(".wav")
            if not dst.exists():
                convert(src, dst)
            rel = dst.resolve().relative_to(manifest_dir)
            lines.append(f"{rel.as_posix()} {split}")

    args.manifest.parent.mkdir(parents=True, exist_ok=True)
    args.manifest.write_text("\n".join(lines) + "\n")
    print(f"{len(lines)} files listed in {args.manifest}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
