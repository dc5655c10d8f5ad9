"""FastAPI service wrapping the core package.

Run with ``fdlopt serve`` or ``uvicorn fdlopt.service:app``.
"""

from .app import app, create_app

__all__ = ["app", "create_app"]
