from importlib.metadata import version, PackageNotFoundError
try:
    __version__ = version("perm_pattern")
except PackageNotFoundError:
    __version__ = 'unknown'
