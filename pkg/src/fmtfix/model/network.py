"""Recurrent encoder-decoder built on plain numpy.

Bidirectional multi-layer LSTM encoder, LSTM decoder initialized through a
learned bridge, Luong-style attention (bilinear "general" or additive
"mlp"), and a softmax over the formatting vocabulary. Forward passes cache
everything the hand-written backward pass needs; gradients are exact, which
the finite-difference tests rely on.

Input projections (x @ Wx) are hoisted out of the recurrent loops and the
per-step weight gradients are accumulated as single stacked matmuls, so the
sequential loops only carry the unavoidable h @ Wh recurrences.

Shapes: B batch, Ts/Tt source/target length, E embedding, U units,
V vocabulary. Gate order inside the packed LSTM weights is [i, f, g, o].
"""

from __future__ import annotations

import numpy as np


def sigmoid(x):
    return 0.5 * (1.0 + np.tanh(0.5 * x))


def log_softmax(x):
    shifted = x - x.max(axis=-1, keepdims=True)
    return shifted - np.log(np.exp(shifted).sum(axis=-1, keepdims=True))


def init_params(hp, input_size: int, output_size: int, dtype=np.float32) -> dict:
    """Uniform(-0.08, 0.08) init with forget-gate bias 1, seeded by hp.seed."""
    rng = np.random.Generator(np.random.PCG64(hp.seed))
    U, E, L = hp.units, hp.embedding, hp.layers
    scale = 0.08

    def uni(*shape):
        return rng.uniform(-scale, scale, size=shape).astype(dtype)

    def lstm_bias():
        b = np.zeros(4 * U, dtype=dtype)
        b[U:2 * U] = 1.0
        return b

    params: dict[str, np.ndarray] = {
        "emb_in": uni(input_size, E),
        "emb_out": uni(output_size, E),
        "out_Wc": uni(3 * U, U),
        "out_bc": np.zeros(U, dtype=dtype),
        "out_W": uni(U, output_size),
        "out_b": np.zeros(output_size, dtype=dtype),
    }
    if hp.attention == "general":
        params["att_W"] = uni(U, 2 * U)
    else:
        params["att_W1"] = uni(2 * U, U)
        params["att_W2"] = uni(U, U)
        params["att_v"] = uni(U)
    for layer in range(L):
        enc_in = E if layer == 0 else 2 * U
        dec_in = E if layer == 0 else U
        for direction in ("fwd", "bwd"):
            params[f"enc{layer}_{direction}_Wx"] = uni(enc_in, 4 * U)
            params[f"enc{layer}_{direction}_Wh"] = uni(U, 4 * U)
            params[f"enc{layer}_{direction}_b"] = lstm_bias()
        params[f"dec{layer}_Wx"] = uni(dec_in, 4 * U)
        params[f"dec{layer}_Wh"] = uni(U, 4 * U)
        params[f"dec{layer}_b"] = lstm_bias()
        params[f"bridge{layer}_Wh"] = uni(2 * U, U)
        params[f"bridge{layer}_bh"] = np.zeros(U, dtype=dtype)
        params[f"bridge{layer}_Wc"] = uni(2 * U, U)
        params[f"bridge{layer}_bc"] = np.zeros(U, dtype=dtype)
    return params


def _gates_forward(z, c_prev, U):
    i = sigmoid(z[:, :U])
    f = sigmoid(z[:, U:2 * U])
    g = np.tanh(z[:, 2 * U:3 * U])
    o = sigmoid(z[:, 3 * U:])
    c_new = f * c_prev + i * g
    tc = np.tanh(c_new)
    h_new = o * tc
    return h_new, c_new, (i, f, g, o, tc, c_prev)


def _gates_backward(d_h, d_c, gates, U, out_dz):
    """Fill out_dz (B, 4U); return dc_prev."""
    i, f, g, o, tc, c_prev = gates
    do = d_h * tc
    dc = d_c + d_h * o * (1.0 - tc * tc)
    out_dz[:, :U] = dc * g * i * (1 - i)
    out_dz[:, U:2 * U] = dc * c_prev * f * (1 - f)
    out_dz[:, 2 * U:3 * U] = dc * i * (1 - g * g)
    out_dz[:, 3 * U:] = do * o * (1 - o)
    return dc * f


class Network:
    """Stateless compute over a parameter dict (weights live in params)."""

    def __init__(self, params: dict, hp, dtype=None):
        self.params = params
        self.hp = hp
        self.dtype = dtype or params["emb_in"].dtype

    # -- encoder ----------------------------------------------------------

    def _run_direction(self, X, mask, layer, direction):
        p = self.params
        U = self.hp.units
        Wh = p[f"enc{layer}_{direction}_Wh"]
        b = p[f"enc{layer}_{direction}_b"]
        B, T, D = X.shape
        XW = (X.reshape(B * T, D) @ p[f"enc{layer}_{direction}_Wx"]).reshape(B, T, 4 * U)
        order = range(T) if direction == "fwd" else range(T - 1, -1, -1)
        h = np.zeros((B, U), dtype=self.dtype)
        c = np.zeros((B, U), dtype=self.dtype)
        H = np.empty((B, T, U), dtype=self.dtype)
        prev_h = np.empty((B, T, U), dtype=self.dtype)
        gates_by_t = {}
        for t in order:
            m = mask[:, t:t + 1]
            prev_h[:, t] = h
            h_new, c_new, gates = _gates_forward(XW[:, t] + h @ Wh + b, c, U)
            gates_by_t[t] = gates
            h = m * h_new + (1 - m) * h
            c = m * c_new + (1 - m) * c
            H[:, t] = h
        return H, h, c, (X, prev_h, gates_by_t)

    def _run_direction_back(self, cache, mask, dH, d_final_h, d_final_c,
                            layer, direction, grads):
        p = self.params
        U = self.hp.units
        Wx = p[f"enc{layer}_{direction}_Wx"]
        Wh = p[f"enc{layer}_{direction}_Wh"]
        X, prev_h, gates_by_t = cache
        B, T, D = X.shape
        order = range(T) if direction == "fwd" else range(T - 1, -1, -1)
        dh_run = d_final_h.copy()
        dc_run = d_final_c.copy()
        dZ = np.zeros((B, T, 4 * U), dtype=self.dtype)
        dz = np.empty((B, 4 * U), dtype=self.dtype)
        for t in reversed(list(order)):
            m = mask[:, t:t + 1]
            dh_total = dh_run + dH[:, t]
            dc_prev = _gates_backward(m * dh_total, m * dc_run,
                                      gates_by_t[t], U, dz)
            dZ[:, t] = dz
            dh_run = (1 - m) * dh_total + dz @ Wh.T
            dc_run = (1 - m) * dc_run + dc_prev
        dZ_flat = dZ.reshape(B * T, 4 * U)
        grads[f"enc{layer}_{direction}_Wx"] += X.reshape(B * T, D).T @ dZ_flat
        grads[f"enc{layer}_{direction}_Wh"] += prev_h.reshape(B * T, U).T @ dZ_flat
        grads[f"enc{layer}_{direction}_b"] += dZ_flat.sum(axis=0)
        return (dZ_flat @ Wx.T).reshape(B, T, D)

    def encode(self, src_ids, src_mask):
        p = self.params
        X = p["emb_in"][src_ids]
        layer_caches = []
        finals = []
        for layer in range(self.hp.layers):
            Hf, hf, cf, cache_f = self._run_direction(X, src_mask, layer, "fwd")
            Hb, hb, cb, cache_b = self._run_direction(X, src_mask, layer, "bwd")
            H = np.concatenate([Hf, Hb], axis=2)
            layer_caches.append((cache_f, cache_b))
            finals.append(((hf, cf), (hb, cb)))
            X = H
        return X, finals, layer_caches

    def bridge(self, finals):
        """Decoder initial states from the encoder's final states."""
        p = self.params
        states = []
        pre_acts = []
        for layer, ((hf, cf), (hb, cb)) in enumerate(finals):
            cat_h = np.concatenate([hf, hb], axis=1)
            cat_c = np.concatenate([cf, cb], axis=1)
            h0 = np.tanh(cat_h @ p[f"bridge{layer}_Wh"] + p[f"bridge{layer}_bh"])
            c0 = cat_c @ p[f"bridge{layer}_Wc"] + p[f"bridge{layer}_bc"]
            states.append((h0, c0))
            pre_acts.append((cat_h, cat_c, h0))
        return states, pre_acts

    # -- attention --------------------------------------------------------

    def attention(self, enc_outs, att_bias, dec_h, mlp_proj=None):
        """Context vector for one decoder step. Returns (context, cache)."""
        p = self.params
        if self.hp.attention == "general":
            q = dec_h @ p["att_W"]
            scores = (enc_outs @ q[:, :, None])[:, :, 0]
            cache_extra = (q,)
        else:
            hidden = np.tanh(mlp_proj + (dec_h @ p["att_W2"])[:, None, :])
            scores = hidden @ p["att_v"]
            cache_extra = (hidden,)
        scores = scores + att_bias
        alpha = np.exp(scores - scores.max(axis=1, keepdims=True))
        alpha /= alpha.sum(axis=1, keepdims=True)
        context = (alpha[:, None, :] @ enc_outs)[:, 0]
        return context, (alpha, dec_h) + cache_extra

    def attention_back(self, d_context, cache, enc_outs, grads, d_enc,
                       d_mlp_proj, stash=None):
        """Per-step attention backward.

        For the bilinear variant the two (B, Ts, 2U) accumulations into
        d_enc and the att_W gradient are deferred: the step quantities go
        into ``stash`` and attention_back_flush turns them into three
        batched matmuls after the decoder loop.
        """
        p = self.params
        alpha, dec_h = cache[0], cache[1]
        d_alpha = (enc_outs @ d_context[:, :, None])[:, :, 0]
        ds = alpha * (d_alpha - (d_alpha * alpha).sum(axis=1, keepdims=True))
        if self.hp.attention == "general":
            q = cache[2]
            dq = (ds[:, None, :] @ enc_outs)[:, 0]
            if stash is not None:
                stash.append((alpha, d_context, ds, q, dec_h, dq))
            else:
                d_enc += alpha[:, :, None] * d_context[:, None, :]
                d_enc += ds[:, :, None] * q[:, None, :]
                grads["att_W"] += dec_h.T @ dq
            return dq @ p["att_W"].T
        d_enc += alpha[:, :, None] * d_context[:, None, :]
        hidden = cache[2]
        d_pre = (ds[:, :, None] * p["att_v"][None, None, :]) * (1.0 - hidden * hidden)
        d_mlp_proj += d_pre
        d_w2in = d_pre.sum(axis=1)
        grads["att_W2"] += dec_h.T @ d_w2in
        grads["att_v"] += (hidden * ds[:, :, None]).sum(axis=(0, 1))
        return d_w2in @ p["att_W2"].T

    def attention_back_flush(self, stash, enc_outs, grads, d_enc):
        if not stash:
            return
        alpha = np.stack([s[0] for s in stash], axis=1)      # (B, Tt, Ts)
        d_ctx = np.stack([s[1] for s in stash], axis=1)      # (B, Tt, 2U)
        ds = np.stack([s[2] for s in stash], axis=1)         # (B, Tt, Ts)
        q = np.stack([s[3] for s in stash], axis=1)          # (B, Tt, 2U)
        dec_h = np.stack([s[4] for s in stash], axis=1)      # (B, Tt, U)
        dq = np.stack([s[5] for s in stash], axis=1)         # (B, Tt, 2U)
        d_enc += alpha.transpose(0, 2, 1) @ d_ctx
        d_enc += ds.transpose(0, 2, 1) @ q
        U = dec_h.shape[2]
        grads["att_W"] += dec_h.reshape(-1, U).T @ dq.reshape(-1, dq.shape[2])

    # -- decoder ----------------------------------------------------------

    def decode_step(self, states, y_prev_emb, enc_outs, att_bias,
                    mlp_proj=None, xw0=None):
        """One teacher-forced or inference step. Returns logits, new states, cache."""
        p = self.params
        U = self.hp.units
        x = y_prev_emb
        new_states = []
        layer_steps = []
        for layer, (h, c) in enumerate(states):
            if layer == 0 and xw0 is not None:
                z = xw0 + h @ p["dec0_Wh"] + p["dec0_b"]
            else:
                z = x @ p[f"dec{layer}_Wx"] + h @ p[f"dec{layer}_Wh"] + p[f"dec{layer}_b"]
            h_new, c_new, gates = _gates_forward(z, c, U)
            layer_steps.append((gates, h, x))
            new_states.append((h_new, c_new))
            x = h_new
        top_h = x
        context, att_cache = self.attention(enc_outs, att_bias, top_h, mlp_proj)
        cat = np.concatenate([context, top_h], axis=1)
        ah = np.tanh(cat @ p["out_Wc"] + p["out_bc"])
        logits = ah @ p["out_W"] + p["out_b"]
        return logits, new_states, (layer_steps, att_cache, cat, ah)

    # -- full training pass -------------------------------------------------

    def forward_loss(self, src_ids, src_mask, tgt_in, tgt_out, tgt_mask):
        p = self.params
        enc_outs, finals, enc_caches = self.encode(src_ids, src_mask)
        states, bridge_cache = self.bridge(finals)
        mlp_proj = enc_outs @ p["att_W1"] if self.hp.attention == "mlp" else None
        att_bias = (src_mask - 1.0) * 1e9

        B, Tt = tgt_in.shape
        Y = p["emb_out"][tgt_in]
        E = Y.shape[2]
        YW0 = (Y.reshape(B * Tt, E) @ p["dec0_Wx"]).reshape(B, Tt, -1)
        step_caches = []
        total = 0.0
        count = float(tgt_mask.sum())
        d_logits_steps = []
        states_t = states
        arangeB = np.arange(B)
        for t in range(Tt):
            logits, new_states, cache = self.decode_step(
                states_t, Y[:, t], enc_outs, att_bias, mlp_proj, xw0=YW0[:, t])
            lsm = log_softmax(logits)
            m = tgt_mask[:, t]
            total -= float((lsm[arangeB, tgt_out[:, t]] * m).sum())
            dl = np.exp(lsm)
            dl[arangeB, tgt_out[:, t]] -= 1.0
            dl *= (m / max(count, 1.0))[:, None]
            d_logits_steps.append(dl)
            # carry state through masked steps so padding cannot leak
            mm = m[:, None]
            carried = [(mm * h_new + (1 - mm) * h_old, mm * c_new + (1 - mm) * c_old)
                       for (h_new, c_new), (h_old, c_old) in zip(new_states, states_t)]
            step_caches.append(cache)
            states_t = carried
        loss = total / max(count, 1.0)
        full_cache = (src_ids, src_mask, tgt_in, tgt_mask, enc_outs, finals,
                      enc_caches, bridge_cache, mlp_proj, Y, step_caches,
                      d_logits_steps)
        return loss, full_cache

    def backward(self, full_cache) -> dict:
        p = self.params
        (src_ids, src_mask, tgt_in, tgt_mask, enc_outs, finals, enc_caches,
         bridge_cache, mlp_proj, Y, step_caches, d_logits_steps) = full_cache
        hp = self.hp
        U, L = hp.units, hp.layers
        grads = {name: np.zeros_like(value) for name, value in p.items()}

        B, Tt = tgt_in.shape
        d_enc = np.zeros_like(enc_outs)
        d_mlp_proj = np.zeros_like(mlp_proj) if mlp_proj is not None else None
        dh_run = [np.zeros((B, U), dtype=self.dtype) for _ in range(L)]
        dc_run = [np.zeros((B, U), dtype=self.dtype) for _ in range(L)]
        dZ_dec = [np.zeros((B, Tt, 4 * U), dtype=self.dtype) for _ in range(L)]
        prev_h_dec = [np.empty((B, Tt, U), dtype=self.dtype) for _ in range(L)]
        dz = np.empty((B, 4 * U), dtype=self.dtype)
        dY = np.zeros_like(Y)
        att_stash: list | None = [] if self.hp.attention == "general" else None

        for t in range(Tt - 1, -1, -1):
            layer_steps, att_cache, cat, ah = step_caches[t]
            dl = d_logits_steps[t]
            grads["out_W"] += ah.T @ dl
            grads["out_b"] += dl.sum(axis=0)
            d_pre = (dl @ p["out_W"].T) * (1.0 - ah * ah)
            grads["out_bc"] += d_pre.sum(axis=0)
            grads["out_Wc"] += cat.T @ d_pre
            d_cat = d_pre @ p["out_Wc"].T
            d_context = d_cat[:, :2 * U]
            d_top = d_cat[:, 2 * U:] + self.attention_back(
                d_context, att_cache, enc_outs, grads, d_enc, d_mlp_proj,
                stash=att_stash)

            m = tgt_mask[:, t][:, None]
            d_x = None
            for layer in range(L - 1, -1, -1):
                gates, h_prev, x_t = layer_steps[layer]
                prev_h_dec[layer][:, t] = h_prev
                dh_total = dh_run[layer] + (d_top if layer == L - 1 else d_x)
                dc_prev = _gates_backward(m * dh_total, m * dc_run[layer],
                                          gates, U, dz)
                dZ_dec[layer][:, t] = dz
                d_x = dz @ p[f"dec{layer}_Wx"].T
                dh_run[layer] = (1 - m) * dh_total + dz @ p[f"dec{layer}_Wh"].T
                dc_run[layer] = (1 - m) * dc_run[layer] + dc_prev
            dY[:, t] = d_x

        for layer in range(L):
            dZ_flat = dZ_dec[layer].reshape(B * Tt, 4 * U)
            grads[f"dec{layer}_Wh"] += prev_h_dec[layer].reshape(B * Tt, U).T @ dZ_flat
            grads[f"dec{layer}_b"] += dZ_flat.sum(axis=0)
        # dec Wx grads: layer 0 input is Y; upper layers' input is the lower
        # layer's (uncarried) output, recovered from the step caches
        grads["dec0_Wx"] += Y.reshape(-1, Y.shape[2]).T @ dZ_dec[0].reshape(B * Tt, 4 * U)
        for layer in range(1, L):
            X_in = np.empty((B, Tt, U), dtype=self.dtype)
            for t in range(Tt):
                X_in[:, t] = step_caches[t][0][layer][2]
            grads[f"dec{layer}_Wx"] += X_in.reshape(B * Tt, U).T @ \
                dZ_dec[layer].reshape(B * Tt, 4 * U)
        np.add.at(grads["emb_out"], tgt_in, dY)
        if att_stash is not None:
            att_stash.reverse()
            self.attention_back_flush(att_stash, enc_outs, grads, d_enc)

        # bridge backward: initial decoder states -> encoder final states
        d_finals = []
        for layer in range(L):
            cat_h, cat_c, h0 = bridge_cache[layer]
            d_pre_h = dh_run[layer] * (1.0 - h0 * h0)
            d_c0 = dc_run[layer]
            grads[f"bridge{layer}_Wh"] += cat_h.T @ d_pre_h
            grads[f"bridge{layer}_bh"] += d_pre_h.sum(axis=0)
            grads[f"bridge{layer}_Wc"] += cat_c.T @ d_c0
            grads[f"bridge{layer}_bc"] += d_c0.sum(axis=0)
            d_cat_h = d_pre_h @ p[f"bridge{layer}_Wh"].T
            d_cat_c = d_c0 @ p[f"bridge{layer}_Wc"].T
            d_finals.append(((d_cat_h[:, :U], d_cat_c[:, :U]),
                             (d_cat_h[:, U:], d_cat_c[:, U:])))

        if mlp_proj is not None:
            B_, T_, _ = enc_outs.shape
            d_enc += d_mlp_proj @ p["att_W1"].T
            grads["att_W1"] += enc_outs.reshape(B_ * T_, -1).T @ \
                d_mlp_proj.reshape(B_ * T_, -1)

        d_layer_out = d_enc
        for layer in range(L - 1, -1, -1):
            cache_f, cache_b = enc_caches[layer]
            (dfh, dfc), (dbh, dbc) = d_finals[layer]
            dXf = self._run_direction_back(cache_f, src_mask, d_layer_out[:, :, :U],
                                           dfh, dfc, layer, "fwd", grads)
            dXb = self._run_direction_back(cache_b, src_mask, d_layer_out[:, :, U:],
                                           dbh, dbc, layer, "bwd", grads)
            d_layer_out = dXf + dXb
        np.add.at(grads["emb_in"], src_ids, d_layer_out)
        return grads

    def loss_and_grads(self, src_ids, src_mask, tgt_in, tgt_out, tgt_mask):
        loss, cache = self.forward_loss(src_ids, src_mask, tgt_in, tgt_out, tgt_mask)
        return loss, self.backward(cache)
