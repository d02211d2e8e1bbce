"""HTTP service exposing the engine to multiple clients.

Every endpoint is stateless: requests carry graphs (and models) in the
same plain-text formats the CLI uses, responses mirror the CLI's JSON
output.  Run with ``uvicorn mixedsep.service:app``.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .classify import DISPLAY_NAMES, FLAG_NAMES, classify
from .errors import MixedSepError, SizeLimit
from .generate import GenSpec, random_graph
from .graph import Edge
from .independence import (
    ALL_AXIOMS,
    Axiom,
    check_axiom,
    closure,
    global_model,
    markov_equivalent,
    pairwise_model,
)
from .maximality import maximalize, non_maximal_pair
from .separation import connecting_walk, separated
from .textio import (
    format_edge,
    format_walk,
    parse_graph,
    parse_model,
    serialize_graph,
    serialize_model,
)

app = FastAPI(
    title="mixedsep",
    version=__version__,
    description="Exact separation queries on graphs with four edge kinds.",
)


class Statement(BaseModel):
    lhs: list[str]
    rhs: list[str]
    given: list[str]

    @classmethod
    def from_triple(cls, triple) -> "Statement":
        a, b, c = triple
        return cls(
            lhs=sorted(str(v) for v in a),
            rhs=sorted(str(v) for v in b),
            given=sorted(str(v) for v in c),
        )


class SeparateRequest(BaseModel):
    graph: str = Field(description="graph in the edge-per-line text format")
    lhs: list[str]
    rhs: list[str]
    given: list[str] = []
    witness: bool = False


class SeparateResponse(BaseModel):
    separated: bool
    witness: Optional[str] = None


class GraphRequest(BaseModel):
    graph: str


class ModelRequest(BaseModel):
    graph: str
    max_nodes: int = 7


class ModelResponse(BaseModel):
    statements: list[Statement]
    text: str


class ClassifyResponse(BaseModel):
    flags: dict[str, bool]


class MaximalCheckResponse(BaseModel):
    maximal: bool
    pair: Optional[list[str]] = None


class MaximalizeResponse(BaseModel):
    graph: str
    added: list[str]


class EquivRequest(BaseModel):
    graph1: str
    graph2: str
    max_nodes: int = 7


class EquivResponse(BaseModel):
    equivalent: bool


class ClosureRequest(BaseModel):
    model: str = Field(description="model in the 'A | B | C' line format")
    axioms: list[str] = ["s1", "s2", "s3", "s4", "s5", "s6"]
    max_nodes: int = 6


class AxiomResult(BaseModel):
    ok: bool
    violation: Optional[str] = None


class AxiomsRequest(BaseModel):
    model: str
    axioms: list[str] = ["s1", "s2", "s3", "s4", "s5", "s6"]


class AxiomsResponse(BaseModel):
    results: dict[str, AxiomResult]
    all_ok: bool


class GenRequest(BaseModel):
    n: int
    cls: str = "any"
    density: float = 0.25
    seed: int = 0


class GenResponse(BaseModel):
    graph: str


def _guard(fn):
    try:
        return fn()
    except SizeLimit as exc:
        raise HTTPException(status_code=413, detail=str(exc))
    except MixedSepError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/separate", response_model=SeparateResponse)
def separate_endpoint(req: SeparateRequest):
    def run():
        g = parse_graph(req.graph)
        is_sep = separated(g, req.lhs, req.rhs, req.given)
        witness = None
        if not is_sep and req.witness:
            for i in sorted(req.lhs):
                for j in sorted(req.rhs):
                    walk = connecting_walk(g, i, j, req.given)
                    if walk is not None:
                        witness = format_walk(walk)
                        break
                if witness is not None:
                    break
        return SeparateResponse(separated=is_sep, witness=witness)

    return _guard(run)


@app.post("/model", response_model=ModelResponse)
def model_endpoint(req: ModelRequest):
    def run():
        model = global_model(parse_graph(req.graph), max_nodes=req.max_nodes)
        return ModelResponse(
            statements=[Statement.from_triple(s) for s in model.statements()],
            text=serialize_model(model),
        )

    return _guard(run)


@app.post("/pairwise", response_model=ModelResponse)
def pairwise_endpoint(req: GraphRequest):
    def run():
        model = pairwise_model(parse_graph(req.graph))
        return ModelResponse(
            statements=[Statement.from_triple(s) for s in model.statements()],
            text=serialize_model(model),
        )

    return _guard(run)


@app.post("/closure", response_model=ModelResponse)
def closure_endpoint(req: ClosureRequest):
    def run():
        model = parse_model(req.model)
        closed = closure(
            model,
            axioms=tuple(Axiom.parse(tok) for tok in req.axioms),
            max_nodes=req.max_nodes,
        )
        return ModelResponse(
            statements=[Statement.from_triple(s) for s in closed.statements()],
            text=serialize_model(closed),
        )

    return _guard(run)


@app.post("/classify", response_model=ClassifyResponse)
def classify_endpoint(req: GraphRequest):
    def run():
        flags = classify(parse_graph(req.graph))
        return ClassifyResponse(flags={DISPLAY_NAMES[n]: flags[n] for n in FLAG_NAMES})

    return _guard(run)


@app.post("/maximal-check", response_model=MaximalCheckResponse)
def maximal_check_endpoint(req: GraphRequest):
    def run():
        pair = non_maximal_pair(parse_graph(req.graph))
        return MaximalCheckResponse(
            maximal=pair is None,
            pair=None if pair is None else [str(v) for v in pair],
        )

    return _guard(run)


@app.post("/maximalize", response_model=MaximalizeResponse)
def maximalize_endpoint(req: GraphRequest):
    def run():
        g = parse_graph(req.graph)
        result = maximalize(g)
        added = sorted(result.edges - g.edges, key=Edge.sort_key)
        return MaximalizeResponse(
            graph=serialize_graph(result),
            added=[format_edge(e) for e in added],
        )

    return _guard(run)


@app.post("/equiv", response_model=EquivResponse)
def equiv_endpoint(req: EquivRequest):
    def run():
        g1, g2 = parse_graph(req.graph1), parse_graph(req.graph2)
        return EquivResponse(equivalent=markov_equivalent(g1, g2, max_nodes=req.max_nodes))

    return _guard(run)


@app.post("/gen", response_model=GenResponse)
def gen_endpoint(req: GenRequest):
    def run():
        g = random_graph(GenSpec(n=req.n, cls=req.cls, density=req.density, seed=req.seed))
        return GenResponse(graph=serialize_graph(g))

    return _guard(run)


@app.post("/axioms", response_model=AxiomsResponse)
def axioms_endpoint(req: AxiomsRequest):
    def run():
        model = parse_model(req.model)
        axioms = tuple(Axiom.parse(tok) for tok in req.axioms) or ALL_AXIOMS
        results = {}
        all_ok = True
        for ax in axioms:
            violations = check_axiom(model, ax)
            ok = not violations
            all_ok &= ok
            results[ax.value] = AxiomResult(
                ok=ok, violation=None if ok else violations[0].describe()
            )
        return AxiomsResponse(results=results, all_ok=all_ok)

    return _guard(run)
