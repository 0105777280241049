from pydantic import BaseModel, Field, field_validator, model_validator

from geo5.errors import InputFormatError
from geo5.exact import format_rat, parse_rat
from geo5.liealg import LieAlgebra


class BracketTerm(BaseModel):
    """
    One term q * e_k of a bracket.
    """
    k: int = Field(..., ge=0, description="Basis index (0-based)")
    q: str = Field(..., description="Rational coefficient as 'p/q' or 'p'")

    @field_validator("q")
    @classmethod
    def _rational(cls, value: str) -> str:
        try:
            return format_rat(parse_rat(value))
        except InputFormatError as exc:
            raise ValueError(str(exc)) from exc


class Bracket(BaseModel):
    """
    Nonzero bracket [e_i, e_j] with i < j.
    """
    i: int = Field(..., ge=0, description="First basis index")
    j: int = Field(..., ge=0, description="Second basis index, greater than i")
    terms: list[BracketTerm] = Field(..., description="Terms of [e_i, e_j]")


class LieAlgebraDocument(BaseModel):
    """
    Structure constants of a real Lie algebra in a chosen basis.
    Omitted pairs are zero brackets.
    """
    dim: int = Field(..., ge=1, description="Dimension")
    basis: list[str] | None = Field(None, description="Basis names, e1..en when omitted")
    brackets: list[Bracket] = Field(default_factory=list, description="Nonzero brackets, i < j")

    @model_validator(mode="after")
    def _check_indices(self):
        if self.basis is None:
            self.basis = [f"e{i + 1}" for i in range(self.dim)]
        if len(self.basis) != self.dim:
            raise ValueError(f"{len(self.basis)} basis names for dimension {self.dim}")
        seen = set()
        for br in self.brackets:
            if not br.i < br.j < self.dim:
                raise ValueError(f"bracket ({br.i}, {br.j}) needs i < j < {self.dim}")
            if (br.i, br.j) in seen:
                raise ValueError(f"bracket ({br.i}, {br.j}) listed twice")
            seen.add((br.i, br.j))
            if any(t.k >= self.dim for t in br.terms):
                raise ValueError(f"term index out of range in bracket ({br.i}, {br.j})")
        return self

    def to_algebra(self) -> LieAlgebra:
        brackets = {}
        for br in self.brackets:
            terms = {}
            for t in br.terms:
                terms[t.k] = terms.get(t.k, 0) + parse_rat(t.q)
            brackets[(br.i, br.j)] = terms
        return LieAlgebra.from_brackets(self.dim, brackets, self.basis)

    @classmethod
    def from_algebra(cls, L: LieAlgebra) -> "LieAlgebraDocument":
        return cls(
            dim=L.dim,
            basis=list(L.basis_names),
            brackets=[
                Bracket(i=i, j=j, terms=[BracketTerm(k=k, q=format_rat(q)) for k, q in sorted(terms.items())])
                for (i, j), terms in L.brackets().items()
            ],
        )
