from slce.fields import build_field
from slce.gf2poly import poly_from_seq
from slce.sequences import generate

_CACHE = {}
_CACHE_LIMIT_Q = 3000


def field_bundle(p, m):
    """(ctx, seq, s2) for GF(p^m); small fields are memoized across tests."""
    key = (p, m)
    found = _CACHE.get(key)
    if found is not None:
        return found
    ctx = build_field(p, m, max_q=3_000_000)
    seq = generate(ctx)
    bundle = (ctx, seq, poly_from_seq(seq))
    if ctx.q <= _CACHE_LIMIT_Q:
        _CACHE[key] = bundle
    return bundle
