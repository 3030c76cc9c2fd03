"""Model file format: a small versioned binary container.

Layout (little-endian throughout):

    magic   4 bytes  b"CRPR"
    version u32
    hlen    u32      length of the JSON header
    header  hlen bytes of UTF-8 JSON: vocabularies, hyperparams, tensor index
    data    concatenated row-major float32 tensors, in header order

Round-trips are bit-exact: tensors are stored and loaded as float32.
"""

from __future__ import annotations

import json
import struct
from dataclasses import asdict
from pathlib import Path

import numpy as np

from .seq2seq import Hyperparams, Seq2SeqModel
from .vocab import Vocabulary

MAGIC = b"CRPR"
VERSION = 1


class ModelFormatError(Exception):
    pass


def save_model(model: Seq2SeqModel, path: Path | str) -> None:
    names = sorted(model.params)
    header = {
        "input_vocab": list(model.vocab.input_tokens),
        "output_vocab": list(model.vocab.output_tokens),
        "hyperparams": asdict(model.hp),
        "tensors": [{"name": n, "shape": list(model.params[n].shape)} for n in names],
    }
    header["hyperparams"]["checkpoints"] = list(model.hp.checkpoints)
    blob = json.dumps(header, sort_keys=True).encode("utf-8")
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<II", VERSION, len(blob)))
        fh.write(blob)
        for name in names:
            tensor = np.ascontiguousarray(model.params[name], dtype="<f4")
            fh.write(tensor.tobytes())


def load_model(path: Path | str) -> Seq2SeqModel:
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != MAGIC:
            raise ModelFormatError(f"bad magic {magic!r}")
        version, hlen = struct.unpack("<II", fh.read(8))
        if version != VERSION:
            raise ModelFormatError(f"unsupported format version {version}")
        header = json.loads(fh.read(hlen).decode("utf-8"))
        hp_dict = dict(header["hyperparams"])
        hp_dict["checkpoints"] = tuple(hp_dict.get("checkpoints", ()))
        hp = Hyperparams(**hp_dict)
        vocab = Vocabulary(tuple(header["input_vocab"]), tuple(header["output_vocab"]))
        params = {}
        for entry in header["tensors"]:
            shape = tuple(entry["shape"])
            count = int(np.prod(shape)) if shape else 1
            raw = fh.read(count * 4)
            if len(raw) != count * 4:
                raise ModelFormatError(f"truncated tensor {entry['name']}")
            params[entry["name"]] = np.frombuffer(raw, dtype="<f4").reshape(shape).copy()
        leftover = fh.read(1)
        if leftover:
            raise ModelFormatError("trailing bytes after the last tensor")
    return Seq2SeqModel(vocab, hp, params)
