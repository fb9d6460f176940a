"""JSON rendering of configurations, systems and query results."""
from dataclasses import is_dataclass

from ..classical import CoupledState
from ..config import Config
from ..reduce import Certificate, Decomposition
from ..system import GSystem, term_str


def config_json(g: Config, m) -> dict:
    return {x: m.elements[v] for x, v in zip(g.vars, g.values)}


def system_json(s: GSystem) -> dict:
    m = s.magma
    out = {"name": s.name, "vars": list(s.vars)}
    if s.rules is not None:
        out["rules"] = {x: term_str(s.rules[x]) for x in s.vars}
    else:
        out["table"] = [[config_json(Config(s.vars, k), m), config_json(Config(s.vars, v), m)]
                        for k, v in sorted(s.table.items())]
    if s.domain is not None:
        out["domain"] = [config_json(g, m) for g in s.domain]
    return out


def to_json(obj, m):
    """Best-effort structural rendering of witnesses and values."""
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, Config):
        return config_json(obj, m)
    if isinstance(obj, GSystem):
        return system_json(obj)
    if isinstance(obj, Decomposition):
        return {"X": system_json(obj.sx), "Y": system_json(obj.sy)}
    if isinstance(obj, Certificate):
        return {"kind": obj.kind, "coordinate": obj.coordinate, "detail": to_json(obj.detail, m)}
    if isinstance(obj, CoupledState):
        return {"internal": obj.internal, "external": obj.external,
                "sensor": obj.sensor, "motor": obj.motor}
    if isinstance(obj, dict):
        if obj and all(isinstance(k, Config) for k in obj):
            return [{"config": config_json(k, m), "intervention": to_json(v, m)}
                    for k, v in obj.items()]
        return {str(k): to_json(v, m) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json(x, m) for x in obj]
    if is_dataclass(obj):
        return {k: to_json(v, m) for k, v in vars(obj).items()}
    return str(obj)
