"""Backend selection for the integer polynomial kernels.

The compiled ``_kernels`` extension is used when it was built; otherwise the
pure-Python ``_kernels_py`` module is used.  Callers look functions up on this
module at call time, so :func:`use_backend` switches every consumer at once.
"""
from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_NAMES = (
    "poly_add", "poly_sub", "poly_scale", "poly_mul", "poly_quo_exact",
    "poly_prem", "poly_content", "poly_gcd", "poly_eval_homog",
)

BACKEND = None


def available_backends():
    return ["cython", "python"] if _compiled is not None else ["python"]


def backend_module(name):
    if name == "cython":
        if _compiled is None:
            raise ImportError("compiled kernels are not built")
        return _compiled
    if name == "python":
        return _kernels_py
    raise ValueError(f"unknown backend {name!r}")


def use_backend(name):
    """Rebind the kernel functions on this module to the named backend."""
    global BACKEND
    mod = backend_module(name)
    g = globals()
    for fn in _NAMES:
        g[fn] = getattr(mod, fn)
    BACKEND = name


use_backend("cython" if _compiled is not None else "python")
