# adversarial_balancing/classifiers/family.py

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from adversarial_balancing.exceptions import InvalidInputError


class FamilyKind(str, Enum):
    LOGISTIC = "logistic"
    KERNEL_RBF = "kernel_rbf"
    MLP = "mlp"
    STUMP = "stump"


# Per-kind defaults: (regularization, max_iter)
_DEFAULTS = {
    FamilyKind.LOGISTIC: (1.0, 1000),
    FamilyKind.KERNEL_RBF: (1.0, 1000),
    FamilyKind.MLP: (1e-4, 2000),
    FamilyKind.STUMP: (1.0, 1),
}


class FamilySpec(BaseModel):
    """
    Classifier family used as a discriminator or propensity model.

    ``kernel_scale`` is the RBF sigma; ``None`` selects the data-driven
    "scale" heuristic gamma = 1 / (d * var) at fit time.
    """

    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    regularization: float = Field(default=None, gt=0)
    kernel_scale: float | None = Field(default=None, gt=0)
    depth: int = Field(default=1, ge=1, le=3)
    max_iter: int = Field(default=None, ge=1)
    tol: float = Field(default=1e-6, gt=0)
    max_support: int = Field(default=1000, ge=2)
    name: str | None = None

    @model_validator(mode="before")
    @classmethod
    def _fill_defaults(cls, data):
        if isinstance(data, dict) and "kind" in data:
            reg, max_iter = _DEFAULTS[FamilyKind(data["kind"])]
            data = dict(data)
            if data.get("regularization") is None:
                data["regularization"] = reg
            if data.get("max_iter") is None:
                data["max_iter"] = max_iter
        return data

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        if self.kind is FamilyKind.MLP:
            return f"mlp{self.depth}"
        return self.kind.value

    @classmethod
    def logistic(cls, **kw) -> "FamilySpec":
        return cls(kind=FamilyKind.LOGISTIC, **kw)

    @classmethod
    def kernel(cls, scale: float | None = None, **kw) -> "FamilySpec":
        return cls(kind=FamilyKind.KERNEL_RBF, kernel_scale=scale, **kw)

    @classmethod
    def mlp(cls, depth: int = 1, **kw) -> "FamilySpec":
        return cls(kind=FamilyKind.MLP, depth=depth, **kw)

    @classmethod
    def stump(cls, **kw) -> "FamilySpec":
        return cls(kind=FamilyKind.STUMP, **kw)


class CvSelect(BaseModel):
    """Candidate families resolved once by k-fold CV before weighting starts."""

    model_config = ConfigDict(frozen=True)

    candidates: tuple[FamilySpec, ...] = Field(min_length=1)
    k: int = Field(default=5, ge=2)
    name: str | None = None

    @property
    def label(self) -> str:
        return self.name or "cv(" + "/".join(c.label for c in self.candidates) + ")"


# ===========================================================
# PRESETS
# ===========================================================
def _presets() -> dict[str, FamilySpec | CvSelect]:
    lr = FamilySpec.logistic(name="lr")
    kernel = FamilySpec.kernel(name="kernel")
    mlps = [FamilySpec.mlp(depth, name=f"mlp{depth}") for depth in (1, 2, 3)]
    return {
        "lr": lr,
        "kernel": kernel,
        "svm": kernel,
        "mlp1": mlps[0],
        "mlp2": mlps[1],
        "mlp3": mlps[2],
        "mlp": CvSelect(candidates=tuple(mlps), name="mlp"),
        "lr_kernel_mlp": CvSelect(candidates=(lr, kernel, *mlps), name="lr_kernel_mlp"),
        "stump": FamilySpec.stump(name="stump"),
    }


PRESET_NAMES = tuple(_presets())


def resolve_family(name: str) -> FamilySpec | CvSelect:
    presets = _presets()
    if name not in presets:
        raise InvalidInputError("Classifiers", f"unknown family preset '{name}'", known=list(presets))
    return presets[name]
