#!/usr/bin/env python3
"""Generate the unit-cube sphere-packing table embedded in the palette module.

For each K we maximize the minimum pairwise distance d of K points in
[0,1]^3 (multi-start repulsion + hard-margin ascent + basin hopping +
neighbor seeding), then convert to a sphere packing: radius r = d/(2+2d),
centers c = r + (1-2r) q.  Best configurations are cached in
packing_cache.json so repeated runs only ever improve the table.

The emitted Rust table is validated here against the same invariants the
crate asserts at test time: pairwise center distance >= 2r - 1e-9 and
centers inside [r - 1e-9, 1 - r + 1e-9]^3.
"""

import json
import os
import sys

import numpy as np

K_MAX = 64
CACHE = os.path.join(os.path.dirname(__file__), "packing_cache.json")
rng = np.random.default_rng(20260810)


def min_dist(P):
    if len(P) < 2:
        return np.inf
    D = np.linalg.norm(P[:, None, :] - P[None, :, :], axis=-1)
    np.fill_diagonal(D, np.inf)
    return D.min()


def repair_sweeps(P, target, sweeps):
    """Push apart all pairs closer than target; clamp to the cube."""
    for _ in range(sweeps):
        diff = P[:, None, :] - P[None, :, :]
        dist = np.linalg.norm(diff, axis=-1)
        np.fill_diagonal(dist, np.inf)
        viol = dist < target
        if not viol.any():
            return P, True
        with np.errstate(invalid="ignore", divide="ignore"):
            unit = diff / dist[..., None]
        unit = np.where(np.isfinite(unit), unit, 0.0)
        deficit = np.where(viol, target - dist, 0.0)
        coincident = viol & (dist < 1e-12)
        if coincident.any():
            kick = rng.normal(size=unit.shape)
            kick /= np.linalg.norm(kick, axis=-1, keepdims=True) + 1e-12
            unit = np.where(coincident[..., None], kick, unit)
        move = (unit * (0.55 * deficit)[..., None]).sum(axis=1)
        P = np.clip(P + move, 0.0, 1.0)
    return P, False


def ascend(P, sweeps=160):
    best = np.clip(np.asarray(P, float), 0, 1).copy()
    best_d = min_dist(best)
    eps = 0.08
    while eps > 2e-8:
        target = best_d * (1.0 + eps)
        P2, ok = repair_sweeps(best.copy(), target, sweeps)
        d2 = min_dist(P2)
        if ok and d2 > best_d:
            best, best_d = P2, d2
        else:
            eps *= 0.5
    return best, best_d


def hop(P, d, rounds=3):
    """Basin hopping: jitter and re-ascend, keeping improvements."""
    best, best_d = P, d
    for i in range(rounds):
        scale = best_d * (0.35 if i % 2 == 0 else 0.12)
        trial = np.clip(best + rng.normal(scale=scale, size=best.shape), 0, 1)
        t, td = ascend(trial)
        if td > best_d:
            best, best_d = t, td
    return best, best_d


def greedy_seed(K, candidates=4096):
    cand = rng.random((candidates, 3))
    picked = [cand[rng.integers(len(cand))]]
    d = np.linalg.norm(cand - picked[0], axis=1)
    for _ in range(K - 1):
        i = int(np.argmax(d))
        picked.append(cand[i])
        d = np.minimum(d, np.linalg.norm(cand - picked[-1], axis=1))
    return np.array(picked)


def grid_seeds(K):
    seeds = []
    for a in range(1, 5):
        for b in range(a, 5):
            for c in range(b, 6):
                if a * b * c == K:
                    xs = np.linspace(0, 1, a) if a > 1 else np.array([0.5])
                    ys = np.linspace(0, 1, b) if b > 1 else np.array([0.5])
                    zs = np.linspace(0, 1, c) if c > 1 else np.array([0.5])
                    g = np.stack(np.meshgrid(xs, ys, zs, indexing="ij"), -1).reshape(-1, 3)
                    seeds.append(g)
    n = int(np.ceil(K ** (1 / 3)))
    if n > 1:
        xs = np.linspace(0, 1, n)
        g = np.stack(np.meshgrid(xs, xs, xs, indexing="ij"), -1).reshape(-1, 3)
        if len(g) >= K:
            keep = [0]
            d = np.linalg.norm(g - g[0], axis=1)
            for _ in range(K - 1):
                i = int(np.argmax(d))
                keep.append(i)
                d = np.minimum(d, np.linalg.norm(g - g[i], axis=1))
            seeds.append(g[keep])
    return seeds


def structured_seeds(K):
    seeds = []
    if K == 3:
        # three mutually face-diagonal corners
        seeds.append(np.array([[0, 0, 0], [1, 1, 0], [1, 0, 1]], float))
    if K == 4:
        seeds.append(np.array([[0, 0, 0], [1, 1, 0], [1, 0, 1], [0, 1, 1]], float))
    if K == 5:
        seeds.append(np.array([[0, 0, 0], [1, 1, 0], [1, 0, 1], [0, 1, 1], [0.5, 0.5, 0.5]], float))
    if K == 6:
        # octahedron-like: face centers
        seeds.append(np.array([
            [0.5, 0.5, 0], [0.5, 0.5, 1], [0.5, 0, 0.5], [0.5, 1, 0.5], [0, 0.5, 0.5], [1, 0.5, 0.5]], float))
    if K == 9:
        corners = np.stack(np.meshgrid([0, 1], [0, 1], [0, 1], indexing="ij"), -1).reshape(-1, 3).astype(float)
        seeds.append(np.vstack([corners, [[0.5, 0.5, 0.5]]]))
    if K == 14:
        corners = np.stack(np.meshgrid([0, 1], [0, 1], [0, 1], indexing="ij"), -1).reshape(-1, 3).astype(float)
        faces = np.array([[0.5, 0.5, 0], [0.5, 0.5, 1], [0.5, 0, 0.5], [0.5, 1, 0.5], [0, 0.5, 0.5], [1, 0.5, 0.5]])
        seeds.append(np.vstack([corners, faces]))
    corners = np.stack(np.meshgrid([0, 1], [0, 1], [0, 1], indexing="ij"), -1).reshape(-1, 3).astype(float)
    if K == 8:
        seeds.append(corners)
    # BCC-like: two interleaved grids
    for n in range(2, 4):
        xs = np.linspace(0, 1, n)
        g1 = np.stack(np.meshgrid(xs, xs, xs, indexing="ij"), -1).reshape(-1, 3)
        off = (xs[:-1] + xs[1:]) / 2 if n > 1 else np.array([0.5])
        g2 = np.stack(np.meshgrid(off, off, off, indexing="ij"), -1).reshape(-1, 3)
        g = np.vstack([g1, g2])
        if len(g) >= K:
            keep = [0]
            d = np.linalg.norm(g - g[0], axis=1)
            for _ in range(K - 1):
                i = int(np.argmax(d))
                keep.append(i)
                d = np.minimum(d, np.linalg.norm(g - g[i], axis=1))
            seeds.append(g[keep])
    return seeds


def load_cache():
    if os.path.exists(CACHE):
        with open(CACHE) as f:
            raw = json.load(f)
        return {int(k): np.array(v) for k, v in raw.items()}
    return {}


def save_cache(cache):
    with open(CACHE, "w") as f:
        json.dump({str(k): v.tolist() for k, v in cache.items()}, f)


def main():
    budget_starts = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    cache = load_cache()
    cache[1] = np.array([[0.5, 0.5, 0.5]])
    cache[2] = np.array([[0.0, 0.0, 0.0], [1.0, 1.0, 1.0]])

    # Pass 1: independent multi-start per K.
    for K in range(3, K_MAX + 1):
        best = cache.get(K)
        best_d = min_dist(best) if best is not None else -1.0
        seeds = structured_seeds(K) + grid_seeds(K)
        seeds += [greedy_seed(K) for _ in range(budget_starts // 2)]
        seeds += [rng.random((K, 3)) for _ in range(budget_starts // 2)]
        for s in seeds:
            P, d = ascend(s)
            if d > best_d:
                best, best_d = P, d
        best, best_d = hop(best, best_d, rounds=2)
        cache[K] = best
        print(f"pass1 K={K:3d} d={best_d:.6f}", file=sys.stderr, flush=True)
    save_cache(cache)

    # Pass 2: neighbor seeding. Down: drop the point whose removal
    # maximizes min distance. Up: greedily add the farthest point.
    improved = True
    sweep = 0
    while improved and sweep < 3:
        improved = False
        sweep += 1
        for K in range(K_MAX - 1, 2, -1):
            src = cache[K + 1]
            best_drop, best_drop_d = None, -1
            for i in range(len(src)):
                Q = np.delete(src, i, axis=0)
                d = min_dist(Q)
                if d > best_drop_d:
                    best_drop, best_drop_d = Q, d
            P, d = ascend(best_drop)
            if d > min_dist(cache[K]) + 1e-12:
                cache[K] = P
                improved = True
                print(f"down  K={K:3d} d={d:.6f}", file=sys.stderr, flush=True)
        for K in range(4, K_MAX + 1):
            src = cache[K - 1]
            # farthest point from existing config on a coarse grid
            gs = np.linspace(0, 1, 17)
            cand = np.stack(np.meshgrid(gs, gs, gs, indexing="ij"), -1).reshape(-1, 3)
            dmin = np.min(np.linalg.norm(cand[:, None, :] - src[None, :, :], axis=-1), axis=1)
            add = cand[int(np.argmax(dmin))]
            P, d = ascend(np.vstack([src, add]))
            if d > min_dist(cache[K]) + 1e-12:
                cache[K] = P
                improved = True
                print(f"up    K={K:3d} d={d:.6f}", file=sys.stderr, flush=True)
        save_cache(cache)

    # Emit the Rust table.
    entries = []
    for K in range(1, K_MAX + 1):
        q = cache[K]
        if K == 1:
            r, c = 0.5, q
        else:
            d = min_dist(q)
            r = d / (2.0 + 2.0 * d)
            c = r + (1.0 - 2.0 * r) * q
            for _ in range(8):
                m = min_dist(c)
                if m >= 2 * r - 1e-12 and c.min() >= r - 1e-12 and c.max() <= 1 - r + 1e-12:
                    break
                r *= 1.0 - 1e-9
                c = r + (1.0 - 2.0 * r) * q
        m = min_dist(c)
        assert m >= 2 * r - 1e-9, (K, m, 2 * r)
        assert c.min() >= r - 1e-9 and c.max() <= 1 - r + 1e-9, (K, r, c.min(), c.max())
        entries.append((r, c))
        print(f"final K={K:3d}  r={r:.6f}  min_pair={m:.6f}", file=sys.stderr)

    total = sum(K for K in range(1, K_MAX + 1))
    lines = []
    lines.append("//! Precomputed packings of K equal spheres in the unit cube, K = 1..=64.")
    lines.append("//!")
    lines.append("//! Generated offline by a multi-start max-min spreading optimizer and")
    lines.append("//! frozen here. Every entry is validated by tests against the table's")
    lines.append("//! own radius: pairwise center distance >= 2r and centers inside")
    lines.append("//! [r, 1 - r]^3 (both with 1e-9 slack).")
    lines.append("")
    lines.append("/// Largest tabulated sphere count.")
    lines.append("pub const K_MAX: usize = 64;")
    lines.append("")
    lines.append("/// Packing radius for each K (index K - 1).")
    lines.append("pub(crate) static RADII: [f64; K_MAX] = [")
    for r, _ in entries:
        lines.append(f"    {float(r)!r},")
    lines.append("];")
    lines.append("")
    lines.append("/// Sphere centers for all K, concatenated; the block for K starts at")
    lines.append("/// K * (K - 1) / 2 and holds K entries.")
    lines.append(f"pub(crate) static CENTERS: [[f64; 3]; {total}] = [")
    for _, c in entries:
        for p in c:
            lines.append(f"    [{float(p[0])!r}, {float(p[1])!r}, {float(p[2])!r}],")
    lines.append("];")
    lines.append("")
    with open("/root/crate/crates/vecfit/src/palette/packing_data.rs", "w") as f:
        f.write("\n".join(lines))
    print("written", file=sys.stderr)


if __name__ == "__main__":
    main()
