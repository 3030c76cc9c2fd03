"""Training, beam-search prediction, and formatting-sequence application.

The model translates a tagged error window (code tokens, formatting tokens,
rule tags) into the corrected formatting-token sequence for that window.
Training is plain SGD with gradient-norm clipping and inverse-time learning
rate decay, fully deterministic for a given seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..encoding import ErrorWindow, FormattingToken
from ..injection import ThreeGramCorpus
from .network import Network, init_params, log_softmax
from .vocab import BOS, EOS, PAD, UNK, Vocabulary, build_vocab


class DivergenceError(Exception):
    pass


@dataclass(frozen=True)
class Hyperparams:
    attention: str = "general"       # "general" | "mlp"
    layers: int = 1
    units: int = 64
    embedding: int = 64
    batch_size: int = 32
    iterations: int = 1000
    learning_rate: float = 1.0
    lr_decay: float = 0.002          # lr_t = lr / (1 + decay * t)
    clip_norm: float = 5.0
    seed: int = 0
    val_fraction: float = 0.1
    eval_every: int = 0              # 0 -> iterations // 10
    checkpoints: tuple[int, ...] = ()

    def __post_init__(self):
        if self.attention not in ("general", "mlp"):
            raise ValueError(f"unknown attention type {self.attention!r}")
        if not 1 <= self.layers <= 3:
            raise ValueError("layers must be between 1 and 3")
        for name in ("units", "embedding", "batch_size", "iterations"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


def paper_scale_hyperparams(protocol: str, seed: int = 0) -> Hyperparams:
    """The published best configuration per training protocol."""
    if protocol == "random":
        return Hyperparams(attention="general", layers=2, units=512,
                           embedding=512, iterations=20000, seed=seed,
                           checkpoints=(10000, 20000))
    return Hyperparams(attention="general", layers=1, units=512,
                       embedding=256, iterations=20000, seed=seed,
                       checkpoints=(10000, 20000))


@dataclass
class Seq2SeqModel:
    vocab: Vocabulary
    hp: Hyperparams
    params: dict = field(repr=False)

    def network(self) -> Network:
        return Network(self.params, self.hp)


@dataclass(frozen=True)
class BeamParams:
    width: int = 5
    max_extra: int = 8        # output length bound: 2 * positions + max_extra

    def __post_init__(self):
        if self.width < 1:
            raise ValueError("beam width must be positive")

    def max_length(self, input_positions: int) -> int:
        return 2 * input_positions + self.max_extra


@dataclass(frozen=True)
class FormattingSequence:
    tokens: tuple[FormattingToken, ...]
    score: float   # total log-probability


# ---------------------------------------------------------------------------
# batching

def _rows_from_dataset(dataset) -> list[tuple[list[str], list[str]]]:
    rows = []
    for item in dataset:
        if hasattr(item, "input_tokens"):
            rows.append((list(item.input_tokens), list(item.target_texts)))
        else:
            rows.append((list(item[0]), list(item[1])))
    return rows


def _encode_rows(rows, vocab: Vocabulary):
    encoded = []
    for inp, tgt in rows:
        src = vocab.encode_input(inp)
        out = vocab.encode_output(tgt)
        encoded.append((src, [BOS] + out, out + [EOS]))
    return encoded


def _make_batch(encoded, indices, dtype):
    src_len = max(len(encoded[i][0]) for i in indices)
    tgt_len = max(len(encoded[i][1]) for i in indices)
    B = len(indices)
    src = np.full((B, src_len), PAD, dtype=np.int64)
    src_mask = np.zeros((B, src_len), dtype=dtype)
    tgt_in = np.full((B, tgt_len), PAD, dtype=np.int64)
    tgt_out = np.full((B, tgt_len), PAD, dtype=np.int64)
    tgt_mask = np.zeros((B, tgt_len), dtype=dtype)
    for row, i in enumerate(indices):
        s, ti, to = encoded[i]
        src[row, :len(s)] = s
        src_mask[row, :len(s)] = 1.0
        tgt_in[row, :len(ti)] = ti
        tgt_out[row, :len(to)] = to
        tgt_mask[row, :len(to)] = 1.0
    return src, src_mask, tgt_in, tgt_out, tgt_mask


def _clip(grads: dict, max_norm: float) -> float:
    total = math.sqrt(sum(float((g * g).sum()) for g in grads.values()))
    if total > max_norm > 0:
        scale = max_norm / total
        for g in grads.values():
            g *= scale
    return total


def evaluate_loss(model: Seq2SeqModel, encoded, batch_size: int = 64) -> tuple[float, float]:
    """(mean token cross-entropy, token accuracy) over encoded rows."""
    net = model.network()
    dtype = model.params["emb_in"].dtype
    total_loss = 0.0
    total_tokens = 0
    correct = 0
    for start in range(0, len(encoded), batch_size):
        indices = range(start, min(start + batch_size, len(encoded)))
        src, src_mask, tgt_in, tgt_out, tgt_mask = _make_batch(encoded, indices, dtype)
        loss, _ = net.forward_loss(src, src_mask, tgt_in, tgt_out, tgt_mask)
        n = tgt_mask.sum()
        total_loss += float(loss) * n
        total_tokens += int(n)
        correct += _count_correct(net, src, src_mask, tgt_in, tgt_out, tgt_mask)
    if total_tokens == 0:
        return 0.0, 0.0
    return total_loss / total_tokens, correct / total_tokens


def _count_correct(net: Network, src, src_mask, tgt_in, tgt_out, tgt_mask) -> int:
    enc_outs, finals, _ = net.encode(src, src_mask)
    states, _ = net.bridge(finals)
    mlp_proj = enc_outs @ net.params["att_W1"] if net.hp.attention == "mlp" else None
    att_bias = (src_mask - 1.0) * 1e9
    Y = net.params["emb_out"][tgt_in]
    correct = 0
    for t in range(tgt_in.shape[1]):
        logits, states, _ = net.decode_step(states, Y[:, t], enc_outs, att_bias, mlp_proj)
        pred = logits.argmax(axis=1)
        correct += int(((pred == tgt_out[:, t]) * (tgt_mask[:, t] > 0)).sum())
    return correct


def train(dataset, hp: Hyperparams, vocab: Vocabulary | None = None,
          ruleset=None, indent_width: int = 4, log=None) -> Seq2SeqModel:
    """Train on (window input, target formatting) rows; returns the
    checkpoint with the best validation loss."""
    rows = _rows_from_dataset(dataset)
    if not rows:
        raise ValueError("empty dataset")
    if vocab is None:
        if ruleset is None:
            raise ValueError("either a vocabulary or a ruleset is required")
        vocab = build_vocab(dataset, ruleset, indent_width)
    encoded = _encode_rows(rows, vocab)

    rng = np.random.Generator(np.random.PCG64(hp.seed))
    order = rng.permutation(len(encoded))
    n_val = max(1, int(len(encoded) * hp.val_fraction)) if len(encoded) > 1 else 0
    val_idx = [int(i) for i in order[:n_val]]
    train_idx = [int(i) for i in order[n_val:]] or [int(i) for i in order]
    val_rows = [encoded[i] for i in val_idx]

    dtype = np.float32
    params = init_params(hp, vocab.input_size, vocab.output_size, dtype)
    model = Seq2SeqModel(vocab, hp, params)
    net = Network(params, hp)

    eval_every = hp.eval_every or max(1, hp.iterations // 10)
    marks = set(hp.checkpoints) | {hp.iterations}
    best_loss = math.inf
    best_params = {k: v.copy() for k, v in params.items()}

    def run_validation(iteration):
        nonlocal best_loss, best_params
        rows_for_val = val_rows if val_rows else [encoded[i] for i in train_idx[:32]]
        val_loss, val_acc = evaluate_loss(model, rows_for_val)
        if not math.isfinite(val_loss):
            raise DivergenceError(f"validation loss is {val_loss} at iteration {iteration}")
        if val_loss < best_loss:
            best_loss = val_loss
            best_params = {k: v.copy() for k, v in params.items()}
        if log:
            log(iteration, val_loss, val_acc)
        return val_loss

    cursor = 0
    shuffled = [int(i) for i in rng.permutation(train_idx)]
    for iteration in range(1, hp.iterations + 1):
        if cursor + hp.batch_size > len(shuffled):
            shuffled = [int(i) for i in rng.permutation(train_idx)]
            cursor = 0
        batch_idx = shuffled[cursor:cursor + hp.batch_size] or shuffled
        cursor += hp.batch_size
        batch = _make_batch(encoded, batch_idx, dtype)
        loss, grads = net.loss_and_grads(*batch)
        if not math.isfinite(loss):
            raise DivergenceError(f"training loss is {loss} at iteration {iteration}")
        _clip(grads, hp.clip_norm)
        lr = hp.learning_rate / (1.0 + hp.lr_decay * iteration)
        for name, g in grads.items():
            params[name] -= (lr * g).astype(params[name].dtype)
        if iteration % eval_every == 0 or iteration in marks:
            run_validation(iteration)

    run_validation(hp.iterations)
    return Seq2SeqModel(vocab, hp, best_params)


# ---------------------------------------------------------------------------
# beam search

def predict_beam(model: Seq2SeqModel, window: ErrorWindow | list[str],
                 bp: BeamParams = BeamParams()) -> list[FormattingSequence]:
    """Up to ``bp.width`` distinct formatting sequences, best first."""
    if isinstance(window, ErrorWindow):
        tokens = window.input_tokens()
        positions = window.size
    else:
        tokens = list(window)
        positions = max(1, sum(1 for t in tokens if _is_formatting_text(t)))
    net = model.network()
    vocab = model.vocab
    src = np.asarray([vocab.encode_input(tokens)], dtype=np.int64)
    dtype = model.params["emb_in"].dtype
    src_mask = np.ones(src.shape, dtype=dtype)
    enc_outs, finals, _ = net.encode(src, src_mask)
    states, _ = net.bridge(finals)
    mlp_proj = enc_outs @ net.params["att_W1"] if net.hp.attention == "mlp" else None
    att_bias = (src_mask - 1.0) * 1e9

    max_len = bp.max_length(positions)
    width = bp.width
    V = vocab.output_size
    banned = np.zeros(V)
    banned[[PAD, BOS, UNK]] = -np.inf

    # live beams: token ids, score, per-layer states
    beams = [([], 0.0, states)]
    finished: list[tuple[list[int], float]] = []
    for _ in range(max_len + 1):
        if not beams:
            break
        B = len(beams)
        prev_ids = np.asarray([b[0][-1] if b[0] else BOS for b in beams], dtype=np.int64)
        stacked = _stack_states(beams)
        enc_rep = np.repeat(enc_outs, B, axis=0)
        bias_rep = np.repeat(att_bias, B, axis=0)
        proj_rep = np.repeat(mlp_proj, B, axis=0) if mlp_proj is not None else None
        y_emb = net.params["emb_out"][prev_ids]
        logits, new_states, _ = net.decode_step(stacked, y_emb, enc_rep, bias_rep, proj_rep)
        logprobs = log_softmax(logits) + banned[None, :]
        scores = np.asarray([b[1] for b in beams])[:, None] + logprobs
        flat = scores.ravel()
        take = min(width, flat.size)
        top = np.argsort(-flat, kind="stable")[:take]
        next_beams = []
        for flat_idx in top:
            beam_idx, token = divmod(int(flat_idx), V)
            score = float(flat[flat_idx])
            tokens_so_far = beams[beam_idx][0]
            if token == EOS:
                finished.append((tokens_so_far, score))
                continue
            state = _slice_states(new_states, beam_idx)
            next_beams.append((tokens_so_far + [token], score, state))
        beams = next_beams
        if len(finished) >= width and beams:
            bound = sorted((s for _, s in finished), reverse=True)[width - 1]
            if max(b[1] for b in beams) < bound:
                break
    for tokens_so_far, score, _ in beams:
        finished.append((tokens_so_far, score))

    seen: set[tuple[int, ...]] = set()
    results: list[FormattingSequence] = []
    for ids, score in sorted(finished, key=lambda item: -item[1]):
        key = tuple(ids)
        if key in seen:
            continue
        seen.add(key)
        results.append(FormattingSequence(
            tuple(FormattingToken.parse(t) for t in vocab.decode_output(ids)),
            score))
        if len(results) == width:
            break
    return results


def _is_formatting_text(text: str) -> bool:
    try:
        FormattingToken.parse(text)
        return True
    except ValueError:
        return False


def _stack_states(beams):
    layers = len(beams[0][2])
    stacked = []
    for layer in range(layers):
        h = np.concatenate([b[2][layer][0] for b in beams], axis=0)
        c = np.concatenate([b[2][layer][1] for b in beams], axis=0)
        stacked.append((h, c))
    return stacked


def _slice_states(states, index):
    return [(h[index:index + 1].copy(), c[index:index + 1].copy())
            for h, c in states]


# ---------------------------------------------------------------------------
# formatting application and the n-gram baseline

def apply_formatting(window_fmt: list[FormattingToken],
                     predicted: list[FormattingToken]) -> list[FormattingToken]:
    """Map a predicted formatting sequence onto the window's positions.

    Excess predictions are discarded; missing ones fall back to the
    window's original tokens.
    """
    n = len(window_fmt)
    if len(predicted) >= n:
        return list(predicted[:n])
    return list(predicted) + list(window_fmt[len(predicted):])


def ngram_translate(window: ErrorWindow, corpus: ThreeGramCorpus) -> list[FormattingToken]:
    """Baseline translator: modal corpus token inside the tags, copy outside."""
    seq = window.seq
    out: list[FormattingToken] = []
    for i in range(window.start, window.end + 1):
        original = seq.fmt[i]
        if window.tag_open <= i <= window.tag_close and i + 1 < len(seq):
            modal = corpus.modal(seq.java[i], seq.java[i + 1])
            out.append(modal if modal is not None else original)
        else:
            out.append(original)
    return out
