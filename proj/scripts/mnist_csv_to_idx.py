#!/usr/bin/env python3
# Copyright 2026 The lcuqml Authors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Convert a CSV of 28x28 digits (784 pixels then label per row) to IDX files.

Usage: mnist_csv_to_idx.py <input.csv[.gz]> <out_dir> [count]

The bundled subset in data/mnist was produced from mlxtend's mnist_5k.csv.gz
(200 rows taken at an even stride so every digit class appears), which is
itself drawn from the classic MNIST digits.
"""
import gzip
import struct
import sys
from pathlib import Path


def main() -> int:
    if len(sys.argv) < 3:
        print(__doc__)
        return 2
    src = Path(sys.argv[1])
    out = Path(sys.argv[2])
    count = int(sys.argv[3]) if len(sys.argv) > 3 else 200
    opener = gzip.open if src.suffix == ".gz" else open
    with opener(src, "rt") as fh:
        rows = [line.strip() for line in fh if line.strip()]
    stride = max(1, len(rows) // count)
    images, labels = [], []
    for line in rows[::stride][:count]:
        vals = [int(float(v)) for v in line.split(",")]
        images.append(bytes(vals[:784]))
        labels.append(vals[784])
    out.mkdir(parents=True, exist_ok=True)
    n = len(images)
    with open(out / "images-idx3-ubyte", "wb") as fh:
        fh.write(struct.pack(">IIII", 0x803, n, 28, 28))
        for img in images:
            fh.write(img)
    with open(out / "labels-idx1-ubyte", "wb") as fh:
        fh.write(struct.pack(">II", 0x801, n))
        fh.write(bytes(labels))
    print(f"wrote {n} images to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
