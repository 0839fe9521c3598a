# numba is optional; MULTIROOT_DISABLE_NUMBA=1 forces the pure-numpy kernels.

import os

_disabled_by_env = os.environ.get("MULTIROOT_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _disabled_by_env:
        raise ImportError("disabled by MULTIROOT_DISABLE_NUMBA")
    import numba as nb

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def njit(*args, **kwargs):
    if HAVE_NUMBA:
        return nb.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return lambda func: func
