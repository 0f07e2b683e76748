"""Report assembly and rendering: stratum reports, CSV/JSON tables, DOT posets."""

import csv
import io
import json
import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional

from hstrata.app.documents import FormSpaceDocument
from hstrata.models.errors import ConsistencyError, InputError
from hstrata.models.partition import Partition
from hstrata.models.strata import NoseStratumDescriptor, StrataPoset, StratumDescriptor
from hstrata.services.binary_forms import gcd_form
from hstrata.services.combinatorics import nose_descriptor, stratum_descriptor
from hstrata.services.invariants import (
    degrees_from_syzygy_oracle, hilbert_tail, lambda_of, nose, relation_degrees, tau, tau_from_ancestor,
)

logger = logging.getLogger(__name__)

STRATUM_COLUMNS = ['lambda', 'c', 'tau', 'tail', 'lambda_conjugate', 'dim', 'cod']
NOSE_COLUMNS = ['A', 'tau', 'c', 'N', 'ancestor_dims', 'A_conjugate', 'dim']


def _text(values) -> str:
    """Tuples print as (a,b,...); the empty one as (0)."""
    values = tuple(values)
    return "(" + ",".join(str(v) for v in values) + ")" if values else "(0)"


@dataclass
class StratumReport:
    input: Dict[str, Any]
    j: int
    d: int
    c: int
    tau: int
    tau_from_ancestor: int
    gcd: str
    tail: List[int]
    lambda_: List[int]
    lambda_conjugate: List[int]
    D: List[int]
    mu_basis_degrees: List[int]
    degree_oracles_agree: bool
    N: List[int]
    A: List[int]
    ancestor_dims: List[int]
    dim_stratum: int
    cod_in_G: int
    cod_tau: int
    cod_in_tau: int
    nose_dim: int

    def to_json(self) -> Dict[str, Any]:
        data = asdict(self)
        data['lambda'] = data.pop('lambda_')
        return data


def analyze_document(doc: FormSpaceDocument) -> StratumReport:
    V = doc.space()
    j, d = V.j, V.d
    tail = hilbert_tail(V)
    lam, c = lambda_of(tail)
    g, gcd_degree = gcd_form(V)
    if gcd_degree != c:
        raise ConsistencyError(f"gcd degree {gcd_degree} differs from the stable tail value {c}")
    t = tau(V)
    t_ancestor = tau_from_ancestor(V)
    if t != t_ancestor:
        raise ConsistencyError(f"tau={t} but the ancestor ideal has {t_ancestor} generators")
    D = relation_degrees(lam, d)
    syzygy_degrees = degrees_from_syzygy_oracle(V)
    if syzygy_degrees != D:
        raise ConsistencyError(f"relation degrees from syzygies {syzygy_degrees} differ from the tail's {D}")
    stratum = stratum_descriptor(j, d, lam, c)
    N, A = nose(V)
    nose_stratum = nose_descriptor(j, d, A)
    if nose_stratum.N != N:
        raise ConsistencyError(f"nose {N} of V differs from the nose {nose_stratum.N} of A={A}")
    logger.info(f"analyzed ({j},{d}) space: tail {tail.values}, tau {t}, A {A}")
    return StratumReport(
        input=doc.to_json(), j=j, d=d, c=c, tau=t, tau_from_ancestor=t_ancestor, gcd=str(g),
        tail=list(tail.values), lambda_=list(lam), lambda_conjugate=list(lam.conjugate()),
        D=list(D), mu_basis_degrees=list(syzygy_degrees), degree_oracles_agree=syzygy_degrees == D,
        N=list(N), A=list(A), ancestor_dims=list(nose_stratum.ancestor_dims),
        dim_stratum=stratum.dim_stratum, cod_in_G=stratum.cod_in_G, cod_tau=stratum.cod_tau,
        cod_in_tau=stratum.cod_in_tau, nose_dim=nose_stratum.dim,
    )


def parse_partition(text: str) -> Partition:
    """'5,1' or '(5,1)'; '0' or '' for the empty partition."""
    cleaned = text.strip().strip('()').strip()
    if not cleaned:
        return Partition()
    try:
        values = [int(v) for v in cleaned.split(',')]
    except ValueError:
        raise InputError(f"not a partition: {text!r}")
    if values == [0]:
        return Partition()
    return Partition(tuple(values))


def _write_csv(header: List[str], rows: List[List]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def strata_csv(strata: List[StratumDescriptor], starred: Optional[set] = None) -> str:
    header = STRATUM_COLUMNS + (['star'] if starred is not None else [])
    rows = []
    for s in strata:
        row = [_text(s.lam), s.c, s.tau, _text(s.tail.values), _text(s.lam_conjugate), s.dim_stratum, s.cod_in_G]
        if starred is not None:
            row.append('*' if s.key in starred else '')
        rows.append(row)
    return _write_csv(header, rows)


def stratum_json(s: StratumDescriptor) -> Dict[str, Any]:
    return {
        'lambda': list(s.lam), 'c': s.c, 'tau': s.tau, 'tail': list(s.tail.values),
        'lambda_conjugate': list(s.lam_conjugate), 'D': list(s.D), 'dim': s.dim_stratum,
        'cod': s.cod_in_G, 'cod_tau': s.cod_tau, 'cod_in_tau': s.cod_in_tau,
    }


def strata_json(j: int, d: int, strata: List[StratumDescriptor], starred: Optional[set] = None) -> str:
    rows = []
    for s in strata:
        row = stratum_json(s)
        if starred is not None:
            row['star'] = s.key in starred
        rows.append(row)
    return json.dumps({'j': j, 'd': d, 'strata': rows}, indent=2) + "\n"


def nose_csv(strata: List[NoseStratumDescriptor]) -> str:
    rows = []
    for s in strata:
        lo = s.j + 1 - s.d
        rows.append([_text(s.A), s.tau, s.c, _text(s.window(lo)), _text(s.ancestor_dims[lo:]),
                     _text(s.A_conjugate), s.dim])
    return _write_csv(NOSE_COLUMNS, rows)


def nose_json(j: int, d: int, strata: List[NoseStratumDescriptor]) -> str:
    rows = [{
        'A': list(s.A), 'tau': s.tau, 'c': s.c, 'N': list(s.N), 'ancestor_dims': list(s.ancestor_dims),
        'A_conjugate': list(s.A_conjugate), 'dim': s.dim, 'cod_tau': s.cod_tau, 'cod_in_tau': s.cod_in_tau,
    } for s in strata]
    return json.dumps({'j': j, 'd': d, 'nose_strata': rows}, indent=2) + "\n"


def _node_id(key) -> str:
    return '"H' + _text(key) + '"'


def poset_dot(poset: StrataPoset) -> str:
    lines = [f"digraph strata_{poset.j}_{poset.d} {{", "  rankdir=BT;"]
    for s in poset.strata:
        label = f"{_text(s.lam)} | {_text(s.tail.values)} | {s.dim_stratum}"
        lines.append(f'  {_node_id(s.key)} [label="{label}"];')
    for a, b in sorted(poset.hasse.edges):
        lines.append(f"  {_node_id(a)} -> {_node_id(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_json(poset: StrataPoset) -> str:
    data = {
        'j': poset.j,
        'd': poset.d,
        'nodes': [stratum_json(s) for s in poset.strata],
        'covers': [[list(a), list(b)] for a, b in sorted(poset.hasse.edges)],
    }
    return json.dumps(data, indent=2) + "\n"
