"""Serializable certificate records with verdict recomputation on load.

A record carries everything needed to rebuild the term and its certificate
from text, so the stored verdict is never trusted: loading re-parses and
re-verifies.  The text form is a line-oriented ``key: value`` document;
``--format json`` mirrors the same fields.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

from . import summation as sm
from . import termparse as tp

FORMAT_TAG = "catalemma-certificate"
FORMAT_VERSION = "1"


@dataclass(frozen=True)
class CertificateRecord:
    """One certificate with enough context to re-verify it from scratch."""

    identity: str
    kind: str  # "gosper" | "zeilberger"
    term: str
    variable: str
    parameters: tuple[str, ...]
    certificate: str
    recvar: str | None = None
    order: int | None = None
    coefficients: tuple[str, ...] | None = None
    inhomogeneous: str | None = None
    param_samples: Mapping[str, tuple[int, ...]] = field(default_factory=dict)
    verdict: str = "unverified"


def record_from_gosper(
    identity: str, term: tp.TermExpression, cert: sm.GosperCertificate
) -> CertificateRecord:
    hyper = sm.hyperterm(term)
    verdict = "verified" if sm.verify_gosper(hyper, cert) else "failed"
    return CertificateRecord(
        identity=identity,
        kind="gosper",
        term=str(term),
        variable=term.variable,
        parameters=term.parameters,
        certificate=str(cert.certificate),
        verdict=verdict,
    )


def record_from_zeilberger(
    identity: str,
    term: tp.TermExpression,
    recvar: str,
    rec: sm.TelescopedRecurrence,
    param_samples: Mapping[str, Sequence[int]] | None = None,
) -> CertificateRecord:
    bi = sm.bivariate_hyperterm(term, recvar)
    samples = {k: tuple(v) for k, v in (param_samples or {}).items()}
    verdict = (
        "verified"
        if sm.verify_zeilberger(bi, rec, param_samples=samples or None)
        else "failed"
    )
    return CertificateRecord(
        identity=identity,
        kind="zeilberger",
        term=str(term),
        variable=term.variable,
        parameters=term.parameters,
        certificate=str(rec.certificate),
        recvar=recvar,
        order=rec.order,
        coefficients=tuple(str(c) for c in rec.coefficients),
        inhomogeneous=None if rec.inhomogeneous is None else str(rec.inhomogeneous),
        param_samples=samples,
        verdict=verdict,
    )


# ---------------------------------------------------------------------------
# reconstruction and re-verification
# ---------------------------------------------------------------------------


def rebuild_recurrence(record: CertificateRecord) -> sm.TelescopedRecurrence:
    if record.kind != "zeilberger":
        raise ValueError("not a zeilberger record")
    assert record.recvar is not None and record.coefficients is not None
    rest = tuple(p for p in record.parameters if p != record.recvar)
    coeffs = tuple(
        tp.to_polynomial(tp.parse_term(text, record.recvar, rest))
        for text in record.coefficients
    )
    certificate = tp.to_rational_function(
        tp.parse_term(record.certificate, record.variable, record.parameters)
    )
    rhs = None
    if record.inhomogeneous is not None:
        rhs = tp.to_polynomial(tp.parse_term(record.inhomogeneous, record.recvar, rest))
    return sm.TelescopedRecurrence(
        order=record.order or len(coeffs) - 1,
        recvar=record.recvar,
        coefficients=coeffs,
        certificate=certificate,
        inhomogeneous=rhs,
    )


def reverify(record: CertificateRecord) -> CertificateRecord:
    """Recompute the verdict from the stored text (never trusting the file)."""
    term = tp.parse_term(record.term, record.variable, record.parameters)
    if record.kind == "gosper":
        hyper = sm.hyperterm(term)
        cert = sm.GosperCertificate(
            tp.to_rational_function(
                tp.parse_term(record.certificate, record.variable, record.parameters)
            )
        )
        ok = sm.verify_gosper(hyper, cert)
    elif record.kind == "zeilberger":
        assert record.recvar is not None
        bi = sm.bivariate_hyperterm(term, record.recvar)
        rec = rebuild_recurrence(record)
        ok = sm.verify_zeilberger(bi, rec, param_samples=record.param_samples or None)
    else:
        raise ValueError(f"unknown certificate kind {record.kind!r}")
    return replace(record, verdict="verified" if ok else "failed")


# ---------------------------------------------------------------------------
# text and json forms
# ---------------------------------------------------------------------------


def to_text(record: CertificateRecord) -> str:
    lines = [f"{FORMAT_TAG}: v{FORMAT_VERSION}"]

    def put(key: str, value) -> None:
        if value is not None:
            lines.append(f"{key}: {value}")

    put("identity", record.identity)
    put("kind", record.kind)
    put("variable", record.variable)
    put("parameters", ",".join(record.parameters))
    put("term", record.term)
    put("certificate", record.certificate)
    put("recvar", record.recvar)
    put("order", record.order)
    if record.coefficients is not None:
        put("coefficients", "; ".join(record.coefficients))
    put("inhomogeneous", record.inhomogeneous)
    if record.param_samples:
        put(
            "param-samples",
            "; ".join(
                f"{name}={','.join(str(v) for v in values)}"
                for name, values in sorted(record.param_samples.items())
            ),
        )
    put("verdict", record.verdict)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> CertificateRecord:
    fields: dict[str, str] = {}
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith(FORMAT_TAG):
        raise ValueError("not a certificate document")
    for line in lines[1:]:
        if ": " not in line:
            raise ValueError(f"malformed line {line!r}")
        key, value = line.split(": ", 1)
        fields[key.strip()] = value.strip()
    return _from_fields(fields)


def _from_fields(fields: Mapping[str, str]) -> CertificateRecord:
    missing = {"identity", "kind", "variable", "term", "certificate"} - set(fields)
    if missing:
        raise ValueError(f"certificate document lacks fields: {sorted(missing)}")
    parameters = tuple(p for p in fields.get("parameters", "").split(",") if p)
    coefficients = None
    if "coefficients" in fields:
        coefficients = tuple(c.strip() for c in fields["coefficients"].split(";"))
    samples: dict[str, tuple[int, ...]] = {}
    if fields.get("param-samples"):
        for piece in fields["param-samples"].split(";"):
            name, values = piece.strip().split("=", 1)
            samples[name] = tuple(int(v) for v in values.split(","))
    return CertificateRecord(
        identity=fields["identity"],
        kind=fields["kind"],
        term=fields["term"],
        variable=fields["variable"],
        parameters=parameters,
        certificate=fields["certificate"],
        recvar=fields.get("recvar"),
        order=int(fields["order"]) if "order" in fields else None,
        coefficients=coefficients,
        inhomogeneous=fields.get("inhomogeneous"),
        param_samples=samples,
        verdict=fields.get("verdict", "unverified"),
    )


def to_json(record: CertificateRecord) -> str:
    payload = {
        "format": f"{FORMAT_TAG}-v{FORMAT_VERSION}",
        "identity": record.identity,
        "kind": record.kind,
        "variable": record.variable,
        "parameters": list(record.parameters),
        "term": record.term,
        "certificate": record.certificate,
        "recvar": record.recvar,
        "order": record.order,
        "coefficients": None if record.coefficients is None else list(record.coefficients),
        "inhomogeneous": record.inhomogeneous,
        "param_samples": {k: list(v) for k, v in record.param_samples.items()},
        "verdict": record.verdict,
    }
    return json.dumps(payload, indent=2) + "\n"


def from_json(text: str) -> CertificateRecord:
    payload = json.loads(text)
    return CertificateRecord(
        identity=payload["identity"],
        kind=payload["kind"],
        term=payload["term"],
        variable=payload["variable"],
        parameters=tuple(payload.get("parameters") or ()),
        certificate=payload["certificate"],
        recvar=payload.get("recvar"),
        order=payload.get("order"),
        coefficients=(
            None
            if payload.get("coefficients") is None
            else tuple(payload["coefficients"])
        ),
        inhomogeneous=payload.get("inhomogeneous"),
        param_samples={
            k: tuple(v) for k, v in (payload.get("param_samples") or {}).items()
        },
        verdict=payload.get("verdict", "unverified"),
    )


def load(path: str) -> CertificateRecord:
    """Read a record (text or json, autodetected) and recompute its verdict."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    stripped = text.lstrip()
    record = from_json(text) if stripped.startswith("{") else from_text(text)
    return reverify(record)


def save(record: CertificateRecord, path: str, fmt: str = "text") -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(to_json(record) if fmt == "json" else to_text(record))
