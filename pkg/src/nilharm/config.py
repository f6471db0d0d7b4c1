"""Tolerance and quadrature defaults, with key=value file overrides.

Every report echoes the effective configuration so runs are
reproducible from their own output.
"""

import os

DEFAULTS = {
    "quad_rtol": 1e-8,
    "max_evals": 2 ** 20,
    "truncation_sigmas": 8.0,
    "start_nodes": 8,
    "flat_rtol": 1e-6,
    "stepwise_rtol": 1e-3,
    "seed": 0,
}


def _parse_value(text):
    text = text.strip()
    low = text.lower()
    if low in ("true", "false"):
        return low == "true"
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        pass
    if len(text) >= 2 and text[0] == text[-1] and text[0] in "\"'":
        return text[1:-1]
    return text


def load_config(path=None, overrides=None):
    """Defaults, then file entries, then explicit overrides."""
    cfg = dict(DEFAULTS)
    env_seed = os.environ.get("NILHARM_SEED")
    if env_seed is not None:
        cfg["seed"] = int(env_seed)
    if path:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValueError(
                        f"{path}:{lineno}: expected key = value")
                key, _, val = line.partition("=")
                key = key.strip()
                if key not in DEFAULTS:
                    raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
                cfg[key] = _parse_value(val)
    if overrides:
        for key, val in overrides.items():
            if val is not None:
                cfg[key] = val
    return cfg


def quad_settings(cfg):
    return {
        "rtol": cfg["quad_rtol"],
        "max_evals": cfg["max_evals"],
        "sigmas": cfg["truncation_sigmas"],
        "start_nodes": cfg["start_nodes"],
    }
