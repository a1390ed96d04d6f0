"""Read and write codes as ket text, structured records and provenance blocks."""
from __future__ import annotations

import json
import re
from importlib import resources
from typing import Optional

from .constructions import asset_records
from .errors import ShapeMismatch
from .synthesis import QuantumCode, make_code_params

_KET = re.compile(r"\|([^|>⟩]+)[>⟩]")
_ASSET = re.compile(r"asset (\w+)")


def state_to_line(state) -> str:
    """One basis state as |a,b,...> kets joined by plus signs."""
    return " + ".join("|" + ",".join(str(x) for x in ket) + ">" for ket in state)


def parse_state_line(line: str) -> list[tuple[int, ...]]:
    """Parse a superposition line; ket entries split on commas or whitespace."""
    kets = []
    for body in _KET.findall(line):
        kets.append(tuple(int(tok) for tok in re.split(r"[,\s]+", body.strip())))
    if not kets:
        raise ShapeMismatch(f"no kets found in line: {line[:60]!r}")
    return kets


def code_to_ket_text(code: QuantumCode) -> str:
    """Serialize a code as a QKET header, an alphabet line and one state per line."""
    p = code.params
    lines = [f"QKET {p.n} {p.K}", " ".join(str(s) for s in p.alphabets)]
    lines.extend(state_to_line(state) for state in code.basis)
    return "\n".join(lines) + "\n"


def parse_ket_text(text: str) -> tuple[tuple[int, ...], list[list[tuple[int, ...]]]]:
    """Parse QKET text back into (alphabets, basis states)."""
    lines = [ln.strip() for ln in text.splitlines()
             if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or not lines[0].startswith("QKET"):
        raise ShapeMismatch("ket text must start with a QKET header line")
    try:
        _, n_str, k_str = lines[0].split()
        n, K = int(n_str), int(k_str)
    except ValueError as exc:
        raise ShapeMismatch(f"bad QKET header: {lines[0]!r}") from exc
    alphabets = tuple(int(tok) for tok in lines[1].split())
    if len(alphabets) != n:
        raise ShapeMismatch(f"{len(alphabets)} alphabet sizes for {n} parties")
    states = [parse_state_line(ln) for ln in lines[2:]]
    if len(states) != K:
        raise ShapeMismatch(f"{len(states)} states for declared dimension {K}")
    return alphabets, states


def code_from_ket_text(text: str, d: int) -> QuantumCode:
    """Build a code (without provenance) from QKET text and a claimed distance d+1."""
    alphabets, states = parse_ket_text(text)
    params = make_code_params(len(alphabets), d, alphabets, len(states))
    return QuantumCode(params, states)


def code_record(code: QuantumCode) -> dict:
    """Structured record of the parameters and integer basis of a code."""
    p = code.params
    return {"params": {"n": p.n, "K": p.K, "d_plus_1": p.d_plus_1,
                       "alphabets": list(p.alphabets), "m": p.m,
                       "singleton": p.singleton,
                       "m_range": list(p.m_range)},
            "basis": [[list(ket) for ket in state] for state in code.basis],
            "status": code.status()}


def code_to_record_text(code: QuantumCode) -> str:
    return json.dumps(code_record(code), indent=1) + "\n"


def code_from_record_text(text: str) -> QuantumCode:
    """Rebuild a code from a structured record, re-deriving its parameters."""
    rec = json.loads(text)
    p = rec["params"]
    params = make_code_params(p["n"], p["d_plus_1"] - 1, p["alphabets"], p["K"])
    if params.m != p["m"] or params.singleton != p["singleton"]:
        raise ShapeMismatch("recorded parameters disagree with the recomputed ones")
    return QuantumCode(params, rec["basis"])


def provenance_block(code: QuantumCode,
                     asset_dir: Optional[str] = None) -> str:
    """Human-readable account of how a code was built, with asset digests."""
    prov = code.provenance
    lines = [f"code: {code.params.code_string()}",
             f"defect m: {code.params.m} "
             f"(admissible window {list(code.params.m_range)})",
             f"status: {code.status()}"]
    if prov is None:
        lines.append("construction: none recorded (loaded from text)")
        return "\n".join(lines) + "\n"
    lines.append(f"construction: {prov.construction}")
    if prov.parameters:
        lines.append("parameters: " +
                     ", ".join(f"{k}={v}" for k, v in prov.parameters))
    records = None
    lines.append("ingredients:")
    for ing in prov.ingredients:
        hit = _ASSET.search(ing)
        if hit:
            if records is None:
                records = asset_records(asset_dir)
            rec = records.get(hit.group(1))
            if rec is not None and rec.sha256 and rec.sha256[:16] not in ing:
                ing = f"{ing} (sha256 {rec.sha256[:16]})"
        lines.append(f"  - {ing}")
    lines.append(f"partition: K={prov.partition.K}, "
                 f"block size {prov.partition.block_size}, "
                 f"strength {prov.t_prime}")
    lines.append(f"distance floor h={prov.h} "
                 f"({'exact' if prov.h_exact else 'lower bound'})")
    for note in prov.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


# --- bundled reference codes -----------------------------------------------------

FIXTURES = {
    "qmds_4_12_2": ("qmds_4_12_2_12p3_2p1.ket", 1),
    "qmds_5_1_3_12": ("qmds_5_1_3_12p4_2p1.ket", 2),
    "qmds_5_1_3_9": ("qmds_5_1_3_9p4_3p1.ket", 2),
    "qmds_8_8_3": ("qmds_8_8_3_4p3_2p5.ket", 2),
}


def fixture_names() -> list[str]:
    return sorted(FIXTURES)


def load_fixture(name: str) -> tuple[QuantumCode, int]:
    """A bundled reference code and the error count d it is claimed to correct."""
    filename, d = FIXTURES[name]
    text = (resources.files("oaqec.fixtures") / filename).read_text()
    return code_from_ket_text(text, d), d
