try:
    from ._scm_version import version
except ImportError:
    # sdists built without the git metadata still carry the dist version
    from importlib.metadata import PackageNotFoundError, version as _dist

    try:
        version = _dist('reciprocals')
    except PackageNotFoundError:
        version = "unknown"
