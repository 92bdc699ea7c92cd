"""Request and response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator


class GraphSpec(BaseModel):
    """One graph, given as exactly one of: a graph6 string, raw edge-list
    text (first line "n <count>", then "u v" lines), or a named family
    with its vertex count."""

    graph6: Optional[str] = None
    edge_list: Optional[str] = None
    family: Optional[Literal["complete", "path", "cycle", "star"]] = None
    n: Optional[int] = None

    @model_validator(mode="after")
    def _exactly_one_source(self) -> "GraphSpec":
        given = sum(
            x is not None for x in (self.graph6, self.edge_list, self.family)
        )
        if given != 1:
            raise ValueError("give exactly one of graph6, edge_list, family")
        if self.family is not None and self.n is None:
            raise ValueError("family needs n")
        if self.family is None and self.n is not None:
            raise ValueError("n only applies to family")
        return self


class SolveRequest(BaseModel):
    graph: GraphSpec
    config: str = Field(description='comma-separated counts, e.g. "0,4,0"')
    target: int = Field(ge=0)
    mode: Literal["at-least-one", "exactly-one"]


class SolveResponse(BaseModel):
    solvable: bool
    witness: Optional[list[tuple[int, int]]] = None
    states_explored: int


class ValueRequest(BaseModel):
    graph: GraphSpec


class ValueResponse(BaseModel):
    graph6: str
    value: Union[int, Literal["infinite"]]
    witness_config: Optional[str] = None
    witness_target: Optional[int] = None


class VerifyRequest(BaseModel):
    n_max: int = Field(ge=3, le=7)
    t_max: int = Field(default=8, ge=0)
    window: int = Field(default=4, ge=0)
    jobs: Optional[int] = Field(default=None, ge=1)


class RecordModel(BaseModel):
    graph6: str
    n: int
    pi: Union[int, Literal["infinite"], None]
    pi_s: Union[int, Literal["infinite"], None]
    equal: bool
    witness_config: Optional[str]
    witness_target: Optional[int]
    elapsed_ms: int


class CheckModel(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    scope: str
    n_max: int
    records: list[RecordModel]
    checks: list[CheckModel]
    passed: bool
    elapsed_ms: int


class HealthResponse(BaseModel):
    status: Literal["ok"]
