"""The classical agent-environment loop and its one-hot embedding as a
coupling of two restricted Z/2Z-systems.

The environment is ``(X, U, Y, h, f)`` with ``f: X×U -> X`` and sensor map
``h: X -> Y``; the agent is ``(I, phi, U, Y, pi)`` with ``phi: I×Y -> I``
and policy ``pi: I -> U``.
"""
import random
from dataclasses import dataclass, field, replace
from typing import Optional

from .config import Config, ConfigSet
from .coupling import couple, is_closed, star_set
from .errors import BadParameter, EncodingTooLarge
from .magma import Z2
from .system import GSystem, iterate, make_system
from .verdict import Verdict

MAX_COMPONENT = 8


@dataclass(frozen=True)
class ClassicalModel:
    X: tuple
    U: tuple
    Y: tuple
    I: tuple
    f: dict = field(hash=False)
    h: dict = field(hash=False)
    phi: dict = field(hash=False)
    pi: dict = field(hash=False)
    name: str = ""


def make_classical(X, U, Y, I, f, h, phi, pi, name="") -> ClassicalModel:
    X, U, Y, I = (tuple(str(e) for e in S) for S in (X, U, Y, I))
    for label, S in (("X", X), ("U", U), ("Y", Y), ("I", I)):
        if not S:
            raise BadParameter(f"{label} must be nonempty")
        if len(set(S)) != len(S):
            raise BadParameter(f"duplicate element in {label}")
    f = {(str(a), str(b)): str(c) for (a, b), c in dict(f).items()}
    h = {str(a): str(b) for a, b in dict(h).items()}
    phi = {(str(a), str(b)): str(c) for (a, b), c in dict(phi).items()}
    pi = {str(a): str(b) for a, b in dict(pi).items()}
    _total("f", f, [(x, u) for x in X for u in U], X)
    _total("h", h, list(X), Y)
    _total("phi", phi, [(i, y) for i in I for y in Y], I)
    _total("pi", pi, list(I), U)
    return ClassicalModel(X, U, Y, I, f, h, phi, pi, name)


def _total(label, fn, dom, cod):
    if set(fn) != set(dom):
        missing = set(dom) - set(fn)
        raise BadParameter(f"{label} is not total over its domain (missing {sorted(missing)[:3]}"
                           f"{' ...' if len(missing) > 3 else ''}, or extra keys)")
    for k, v in fn.items():
        if v not in cod:
            raise BadParameter(f"{label}{k} = {v!r} lies outside its codomain")


@dataclass(frozen=True)
class CoupledState:
    """Internal and external state plus the latched sensor/motor values."""
    internal: str
    external: str
    sensor: Optional[str] = None
    motor: Optional[str] = None


def initial_state(m: ClassicalModel, internal, external) -> CoupledState:
    """Latches start at ``y = h(x)`` and ``u = pi(iota)``."""
    return CoupledState(internal, external, m.h[external], m.pi[internal])


def classical_step(m: ClassicalModel, st: CoupledState) -> CoupledState:
    x2 = m.f[(st.external, m.pi[st.internal])]
    i2 = m.phi[(st.internal, m.h[x2])]
    return CoupledState(i2, x2, m.h[x2], m.pi[i2])


def classical_trace(m: ClassicalModel, st: CoupledState, k: int) -> list:
    trace = [st]
    for _ in range(k):
        trace.append(classical_step(m, trace[-1]))
    return trace


def delayed_step(m: ClassicalModel, st: CoupledState) -> CoupledState:
    """One step in which both sides read the latched values simultaneously.

    The environment acts on the latched motor value and the agent updates on
    the latched sensor value, i.e. on ``h`` of the previous external state.
    This is what the indicator embedding computes.
    """
    x2 = m.f[(st.external, st.motor)]
    i2 = m.phi[(st.internal, st.sensor)]
    return CoupledState(i2, x2, m.h[x2], m.pi[i2])


def delayed_trace(m: ClassicalModel, st: CoupledState, k: int) -> list:
    trace = [st]
    for _ in range(k):
        trace.append(delayed_step(m, trace[-1]))
    return trace


# -- embedding ---------------------------------------------------------------

def _block(prefix, S):
    return tuple(f"{prefix}_{e}" for e in S)


@dataclass
class Embedding:
    model: ClassicalModel
    env: GSystem        # over A = X' ⊔ Y' ⊔ U'
    agent: GSystem      # over B = I' ⊔ Y' ⊔ U'
    coupled: GSystem    # over A ∪ B, domain H0 * H1
    blocks: dict        # "X"/"Y"/"U"/"I" -> variable tuple

    @property
    def vars(self):
        return self.coupled.vars

    def encode(self, st: CoupledState) -> Config:
        chosen = {"X": st.external, "Y": st.sensor, "U": st.motor, "I": st.internal}
        values = []
        for x in self.coupled.vars:
            label, elem = x.split("_", 1)
            values.append(1 if chosen[label] == elem else 0)
        return Config(self.coupled.vars, tuple(values))

    def decode(self, g: Config) -> CoupledState:
        picked = {}
        for label, V in self.blocks.items():
            on = [x.split("_", 1)[1] for x in V if g[x] == 1]
            if len(on) > 1:
                raise BadParameter(f"block {label} is not one-hot in {g}")
            picked[label] = on[0] if on else None
        return CoupledState(picked["I"], picked["X"], picked["Y"], picked["U"])


def _onehot(V, elem):
    return tuple(1 if v.split("_", 1)[1] == elem else 0 for v in V)


def embed(m: ClassicalModel, policy=None) -> Embedding:
    """Indicator encoding of the classical loop as ``(H0, α) * (H1, β)``.

    ``α(x, y, u) = (f(x, u), h(f(x, u)), 0)`` on ``H0 = X × Y × Û`` and
    ``β(ι, y, u) = (phi(ι, y), 0, pi(phi(ι, y)))`` on ``H1 = I × Ŷ × U``, where
    the hat adjoins the all-zero block.  α at ``u = 0`` and β at ``y = 0`` are
    outside the original maps; they are set to ``(x, h(x), 0)`` and
    ``(ι, 0, pi(ι))``, which never occur on ``H0 * H1``.

    ``policy`` overrides ``pi`` inside β only (fault injection).
    """
    for label, S in (("X", m.X), ("U", m.U), ("Y", m.Y), ("I", m.I)):
        if len(S) > MAX_COMPONENT:
            raise EncodingTooLarge(f"|{label}| = {len(S)} exceeds {MAX_COMPONENT}")
    pi = dict(m.pi if policy is None else policy)
    Xb, Yb, Ub, Ib = _block("X", m.X), _block("Y", m.Y), _block("U", m.U), _block("I", m.I)
    A = Xb + Yb + Ub
    B = Ib + Yb + Ub
    zY, zU = (0,) * len(Yb), (0,) * len(Ub)

    alpha = {}
    for x in m.X:
        for y in m.Y:
            for u in list(m.U) + [None]:
                uv = zU if u is None else _onehot(Ub, u)
                key = _onehot(Xb, x) + _onehot(Yb, y) + uv
                x2 = x if u is None else m.f[(x, u)]
                alpha[key] = _onehot(Xb, x2) + _onehot(Yb, m.h[x2]) + zU
    beta = {}
    for i in m.I:
        for y in list(m.Y) + [None]:
            for u in m.U:
                yv = zY if y is None else _onehot(Yb, y)
                key = _onehot(Ib, i) + yv + _onehot(Ub, u)
                i2 = i if y is None else m.phi[(i, y)]
                beta[key] = _onehot(Ib, i2) + zY + _onehot(Ub, pi[i2])
    H0 = ConfigSet(A, (Config(A, k) for k in alpha))
    H1 = ConfigSet(B, (Config(B, k) for k in beta))
    env = make_system(Z2, A, {Config(A, k): Config(A, v) for k, v in alpha.items()}, H0, name="env")
    agent = make_system(Z2, B, {Config(B, k): Config(B, v) for k, v in beta.items()}, H1, name="agent")
    coupled = couple(env, agent, name=m.name or "classical")
    return Embedding(m, env, agent, coupled, {"X": Xb, "Y": Yb, "U": Ub, "I": Ib})


def one_hot_ok(emb: Embedding, g: Config) -> bool:
    """Every block is one-hot or all-zero."""
    return all(sum(g[x] for x in V) <= 1 for V in emb.blocks.values())


def equivalence_check(m: ClassicalModel, k: int, inits, embedding: Embedding = None,
                      reference=classical_trace) -> Verdict:
    """Compare decoded embedded traces with reference traces.

    ``inits`` are :class:`CoupledState` values (see :func:`initial_state`).
    ``reference`` defaults to the classical loop; pass :func:`delayed_trace`
    to compare against the simultaneous-update semantics instead.
    Witness on failure: the init, the first diverging step and both states.
    """
    emb = embedding or embed(m)
    for st in inits:
        expect = reference(m, st, k)
        got = iterate(emb.coupled, emb.encode(st), k)
        for t, (c, g) in enumerate(zip(expect, got)):
            d = emb.decode(g)
            if d != c:
                return Verdict(False, {"init": st, "step": t, "classical": c, "embedded": d})
    return Verdict(True)


def random_model(rng: random.Random, max_size: int = 4, name="") -> ClassicalModel:
    sizes = [rng.randint(1, max_size) for _ in range(4)]
    X = [f"x{i}" for i in range(sizes[0])]
    U = [f"u{i}" for i in range(sizes[1])]
    Y = [f"y{i}" for i in range(sizes[2])]
    I = [f"i{i}" for i in range(sizes[3])]
    f = {(x, u): rng.choice(X) for x in X for u in U}
    h = {x: rng.choice(Y) for x in X}
    phi = {(i, y): rng.choice(I) for i in I for y in Y}
    pi = {i: rng.choice(U) for i in I}
    return make_classical(X, U, Y, I, f, h, phi, pi, name)
