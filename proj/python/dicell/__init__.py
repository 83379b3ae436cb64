"""Exact cellular homology of finite simple digraphs."""
from ._dicell import *  # noqa: F401,F403
