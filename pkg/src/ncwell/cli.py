"""Command-line front end.

    ncwell verify
    ncwell transform --potential gravity-oscillator --mode space-only
    ncwell spectrum --particle neutron --levels 5
    ncwell perturb --config configs/perturb.cfg
    ncwell bounds --delta 1e-2

Settings come from defaults, then a key=value config file (``--config`` or
``$NCWELL_CONFIG``), then flags; later sources win. Errors go to stderr as
one JSON line and the exit status is nonzero.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .errors import ConfigError, NCWellError
from .hamiltonian.builder import HamiltonianKind, derive
from .hamiltonian.conformance import MATCH, MISMATCH, UNSPECIFIED, full_conformance
from .algebra.properties import run_property_suite
from .spectra import serialize
from .spectra.airy import airy_zero, wkb_level
from .spectra.levels import energy_scale, gravity_well_spectrum, nc_bound_from_measurement
from .spectra.oscillator import perturbation_shifts
from .spectra.params import PARTICLES, PhysicalParams
from .transform.bopp import Mode
from .transform.planck import PlanckVariant, effective_planck

COMMANDS = ("verify", "transform", "spectrum", "perturb", "bounds")
FORMATS = ("text", "json", "csv")
EXIT_CONFIG = 2
EXIT_DOMAIN = 1

# config key -> (type, default)
_FIELDS = {
    "command": (str, None),
    "mode": (str, "full"),
    "potential": (str, "gravity"),
    "particle": (str, None),
    "mass": (float, None),
    "g": (float, None),
    "hbar": (float, None),
    "theta": (float, 0.0),
    "eta": (float, 0.0),
    "k": (float, None),
    "omega": (float, None),
    "q": (float, 0.0),
    "B": (float, 0.0),
    "levels": (int, 5),
    "basis": (int, 16),
    "states": (str, "0:0,1:1,1:-1"),
    "delta": (float, None),
    "variant": (str, "simple"),
    "instances": (int, 200),
    "seed": (int, 0),
    "format": (str, "text"),
    "out": (str, None),
}


@dataclass
class RunConfig:
    command: str
    mode: Mode = Mode.FULL
    potential: HamiltonianKind = HamiltonianKind.GRAVITY_WELL
    params: PhysicalParams | None = None
    levels: int = 5
    basis: int = 16
    states: list = field(default_factory=list)
    delta: float | None = None
    hbar: float | None = None
    variant: PlanckVariant = PlanckVariant.SIMPLE
    instances: int = 200
    seed: int = 0
    format: str = "text"
    out: str | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message, "parse_args")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ncwell", description="Noncommutative gravitational-well toolkit.")
    ap.add_argument("command_pos", nargs="?", choices=COMMANDS, metavar="COMMAND",
                    help="one of: " + ", ".join(COMMANDS))
    ap.add_argument("--command", choices=COMMANDS)
    ap.add_argument("--mode", choices=[m.value for m in Mode])
    ap.add_argument("--potential", choices=[k.value for k in HamiltonianKind])
    ap.add_argument("--particle", choices=sorted(PARTICLES))
    ap.add_argument("--mass", type=float)
    ap.add_argument("--g", type=float)
    ap.add_argument("--hbar", type=float, help="override the CODATA value (e.g. 1 for natural units)")
    ap.add_argument("--theta", type=float)
    ap.add_argument("--eta", type=float)
    ap.add_argument("--k", type=float)
    ap.add_argument("--omega", type=float)
    ap.add_argument("--q", type=float)
    ap.add_argument("--B", type=float)
    ap.add_argument("--levels", type=int)
    ap.add_argument("--basis", type=int)
    ap.add_argument("--states", help="circular states as n:m_l pairs, e.g. 0:0,1:1,1:-1")
    ap.add_argument("--delta", type=float, help="fractional level agreement for bounds")
    ap.add_argument("--variant", choices=[v.value for v in PlanckVariant])
    ap.add_argument("--instances", type=int, help="property-suite instances for verify")
    ap.add_argument("--seed", type=int)
    ap.add_argument("--format", choices=FORMATS)
    ap.add_argument("--config")
    ap.add_argument("--out")
    return ap


def read_config(path: str) -> dict[str, str]:
    """Flat key=value file; '#' starts a comment."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc.strerror}", "read_config") from None
    out = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value", "read_config")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in _FIELDS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}", "read_config")
        out[key] = value
    return out


def _convert(key: str, value):
    typ = _FIELDS[key][0]
    if value is None or isinstance(value, typ):
        return value
    try:
        return typ(value)
    except ValueError:
        raise ConfigError(f"{key}: cannot parse {value!r} as {typ.__name__}", "read_config") from None


def parse_states(text: str) -> list[tuple[int, int]]:
    states = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            n, m_l = item.split(":")
            states.append((int(n), int(m_l)))
        except ValueError:
            raise ConfigError(f"bad state {item!r}; expected n:m_l", "parse_states") from None
    if not states:
        raise ConfigError("no states given", "parse_states")
    return states


def _params(s: dict, command: str) -> PhysicalParams:
    base: dict = {}
    if s["particle"]:
        base.update(PARTICLES[s["particle"]])
    if s["mass"] is not None:
        base["m"] = s["mass"]
    if s["g"] is not None:
        base["g"] = s["g"]
    if "m" not in base:
        raise ConfigError(f"{command} needs --mass or --particle", "RunConfig")
    for key in ("hbar", "k", "omega"):
        if s[key] is not None:
            base[key] = s[key]
    for key in ("theta", "eta", "q", "B"):
        base[key] = s[key]
    return PhysicalParams(**base)


def resolve(argv=None, environ=None) -> RunConfig:
    environ = os.environ if environ is None else environ
    ns = build_parser().parse_args(argv)
    flags = {k: v for k, v in vars(ns).items() if v is not None}
    if "command_pos" in flags:
        pos = flags.pop("command_pos")
        if "command" in flags and flags["command"] != pos:
            raise ConfigError(f"conflicting commands {pos!r} and {flags['command']!r}", "parse_args")
        flags["command"] = pos
    path = flags.pop("config", None) or environ.get("NCWELL_CONFIG")
    settings = {k: d for k, (_, d) in _FIELDS.items()}
    if path:
        settings.update({k: _convert(k, v) for k, v in read_config(path).items()})
    settings.update(flags)

    command = settings["command"]
    if command not in COMMANDS:
        raise ConfigError(f"command must be one of {COMMANDS}, got {command!r}", "RunConfig")
    if settings["format"] not in FORMATS:
        raise ConfigError(f"format must be one of {FORMATS}", "RunConfig")
    try:
        mode = Mode(settings["mode"])
        potential = HamiltonianKind(settings["potential"])
        variant = PlanckVariant(settings["variant"])
    except ValueError as exc:
        raise ConfigError(str(exc), "RunConfig") from None
    if settings["particle"] is not None and settings["particle"] not in PARTICLES:
        raise ConfigError(f"unknown particle {settings['particle']!r}", "RunConfig")
    for key in ("levels", "basis", "instances"):
        if settings[key] < 1:
            raise ConfigError(f"{key} must be positive, got {settings[key]}", "RunConfig")

    params = _params(settings, command) if command in ("spectrum", "perturb") else None
    return RunConfig(
        command=command,
        mode=mode,
        potential=potential,
        params=params,
        levels=settings["levels"],
        basis=settings["basis"],
        states=parse_states(settings["states"]) if command == "perturb" else [],
        delta=settings["delta"],
        hbar=settings["hbar"],
        variant=variant,
        instances=settings["instances"],
        seed=settings["seed"],
        format=settings["format"],
        out=settings["out"],
    )


# ---- commands ---------------------------------------------------------------


def _verify(cfg: RunConfig) -> str:
    reports = full_conformance()
    suite = run_property_suite(cfg.instances, cfg.seed)
    rows = [r.as_dict() for rep in reports for r in rep.rows]
    summary = {v: sum(1 for r in rows if r["verdict"] == v) for v in (MATCH, MISMATCH, UNSPECIFIED)}
    if cfg.format == "json":
        return serialize.dumps({
            "command": "verify",
            "summary": summary,
            "conformance": [rep.as_dict() for rep in reports],
            "property_suite": suite,
        })
    if cfg.format == "csv":
        return serialize.rows_to_csv(rows)
    parts = [rep.to_text() for rep in reports]
    parts.append("== summary")
    parts.extend(f"  {k:<22}{v}" for k, v in summary.items())
    parts.append(f"== algebra property suite (seed {suite['seed']})")
    for name, res in suite["properties"].items():
        status = "PASS" if res["passed"] else "FAIL"
        parts.append(f"  {name:<26}{status}  {res['instances'] - res['failures']}/{res['instances']}")
    return "\n".join(parts) + "\n"


def _transform(cfg: RunConfig) -> str:
    form = derive(cfg.potential, cfg.mode)
    data = {
        "command": "transform",
        "potential": cfg.potential.value,
        "mode": cfg.mode.value,
        "hamiltonian": str(form.raw),
        "buckets": {k: str(v) for k, v in form.buckets.items()},
        "residual": str(form.residual),
    }
    if cfg.format == "json":
        return serialize.dumps(data)
    if cfg.format == "csv":
        return serialize.rows_to_csv([{"bucket": k, "coefficient": v} for k, v in data["buckets"].items()])
    lines = [f"H ({cfg.potential.value}, {cfg.mode.value}) = {data['hamiltonian']}"]
    lines += [f"  {k:<18}{v}" for k, v in data["buckets"].items()]
    return "\n".join(lines) + "\n"


def _xi(p: PhysicalParams, variant: PlanckVariant) -> float:
    return effective_planck(variant=variant).xi.evaluate_real(p.symbol_values())


SPECTRUM_COLUMNS = [
    "n", "alpha_n", "zeta_n", "E_airy_J", "E_airy_eV", "E_wkb_J", "E_wkb_eV",
    "xi", "E_hbar_eff_J", "E_hbar_eff_eV",
]


def spectrum_table(p: PhysicalParams, n_max: int, variant=PlanckVariant.SIMPLE) -> list[dict]:
    airy = gravity_well_spectrum(p, n_max)
    wkb = gravity_well_spectrum(p, n_max, method="WKB")
    xi = _xi(p, PlanckVariant(variant))
    shifted = gravity_well_spectrum(p, n_max, hbar=p.hbar * (1 + xi))
    rows = []
    for n, (a, w, s) in enumerate(zip(airy.levels, wkb.levels, shifted.levels), 1):
        rows.append({
            "n": n, "alpha_n": airy_zero(n), "zeta_n": wkb_level(n),
            "E_airy_J": a.energy_J, "E_airy_eV": a.energy_eV,
            "E_wkb_J": w.energy_J, "E_wkb_eV": w.energy_eV,
            "xi": xi, "E_hbar_eff_J": s.energy_J, "E_hbar_eff_eV": s.energy_eV,
        })
    return rows


def _spectrum(cfg: RunConfig) -> str:
    p = cfg.params
    rows = spectrum_table(p, cfg.levels, cfg.variant)
    if cfg.format == "json":
        return serialize.dumps({
            "command": "spectrum",
            "params": p.as_dict(),
            "variant": cfg.variant.value,
            "energy_scale_J": energy_scale(p),
            "levels": rows,
        })
    if cfg.format == "csv":
        return serialize.rows_to_csv(rows, SPECTRUM_COLUMNS)
    lines = [f"gravitational well: m = {serialize.fmt(p.m)} kg, g = {serialize.fmt(p.g)} m/s^2,"
             f" xi = {serialize.fmt(rows[0]['xi'])}"]
    lines.append(f"{'n':>3} {'alpha_n':>14} {'zeta_n':>14} {'E_airy (peV)':>16} {'E_wkb (peV)':>16} {'E_eff (peV)':>16}")
    for r in rows:
        lines.append(
            f"{r['n']:>3} {r['alpha_n']:>14.10f} {r['zeta_n']:>14.10f}"
            f" {r['E_airy_eV'] * 1e12:>16.10f} {r['E_wkb_eV'] * 1e12:>16.10f} {r['E_hbar_eff_eV'] * 1e12:>16.10f}"
        )
    return "\n".join(lines) + "\n"


def _perturb(cfg: RunConfig) -> str:
    report = perturbation_shifts(cfg.params, cfg.states, basis_size=cfg.basis, mode=cfg.mode.value)
    if cfg.format == "json":
        data = {"command": "perturb", "mode": cfg.mode.value, "params": cfg.params.as_dict()}
        data.update(report.as_dict())
        return serialize.dumps(data)
    if cfg.format == "csv":
        return serialize.perturbation_to_csv(report)
    f = serialize.fmt
    lines = [
        f"V1 coefficient (printed)   {f(report.V1_coefficient)}",
        f"L_z coefficient (derived)  {f(report.lz_coefficient)}",
        f"V2 printed px^2, x^2       {f(report.V2_coefficients['px2'])}, {f(report.V2_coefficients['x2'])}",
        f"coupling ratio |E|/omega   {f(report.coupling_ratio)}",
        f"{'n':>3} {'m_l':>4} {'E0':>20} {'dE_lz':>20} {'predicted':>20} {'oracle':>20} {'oracle-pred':>14}",
    ]
    for s in report.states:
        lines.append(
            f"{s.n:>3} {s.m_l:>4} {f(s.unperturbed):>20} {f(s.lz_shift):>20} {f(s.predicted_energy):>20}"
            f" {f(s.oracle_energy):>20} {f(s.oracle_delta):>14}"
        )
    return "\n".join(lines) + "\n"


def _bounds(cfg: RunConfig) -> str:
    if cfg.delta is None:
        raise ConfigError("bounds needs --delta", "RunConfig")
    bound = nc_bound_from_measurement(cfg.delta, cfg.variant, hbar=cfg.hbar)
    data = bound.as_dict()
    if cfg.format == "json":
        return serialize.dumps({"command": "bounds", **data})
    if cfg.format == "csv":
        return serialize.rows_to_csv([data])
    return "".join(f"{k:<16}{serialize.fmt(v) if v is not None else 'n/a'}\n" for k, v in data.items())


_HANDLERS = {
    "verify": _verify,
    "transform": _transform,
    "spectrum": _spectrum,
    "perturb": _perturb,
    "bounds": _bounds,
}


def run(cfg: RunConfig) -> str:
    return _HANDLERS[cfg.command](cfg)


def _emit_error(exc: Exception, stderr) -> None:
    payload = {
        "error": type(exc).__name__,
        "operation": getattr(exc, "operation", "") or "",
        "message": str(exc),
    }
    stderr.write(json.dumps(payload) + "\n")


def main(argv=None, *, stdout=None, stderr=None, environ=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        cfg = resolve(argv, environ)
        text = run(cfg)
        if cfg.out:
            try:
                with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
                    fh.write(text)
            except OSError as exc:
                raise ConfigError(f"cannot write {cfg.out!r}: {exc.strerror}", "write_output") from None
        else:
            stdout.write(text)
    except ConfigError as exc:
        _emit_error(exc, stderr)
        return EXIT_CONFIG
    except (NCWellError, ValueError, ZeroDivisionError, ArithmeticError) as exc:
        _emit_error(exc, stderr)
        return EXIT_DOMAIN
    return 0


if __name__ == "__main__":
    sys.exit(main())
