"""
Surface Factory.
Resolves builtin surface names, surface files and the configured surface directory.
"""
import os
from typing import Dict, Optional

from .ribbon import RibbonSurface, make_surface
from ..algebra.fgroup import parse_word
from ..utils.config import get_config
from ..utils.errors import InvalidArgument, ParseError
from ..utils.logging import get_logger


logger = get_logger(__name__)

SURFACE_SUFFIX = ".surface"


# Registry of builtin surfaces
SURFACE_REGISTRY: Dict[str, RibbonSurface] = {
    "torus1": make_surface([1, 2, -1, -2], name="torus1"),
    "pants": make_surface([1, -1, 2, -2], name="pants"),
    # a B b A: the order whose crossings of aBB and aB give the two pair classes
    # ⟨BBa, aB⟩ and ⟨aBB, Ba⟩ with opposite signs
    "section13": make_surface([1, -2, 2, -1], name="section13"),
}


def parse_surface_text(text: str, source: str = "<text>") -> RibbonSurface:
    """
    Parse the line format ``rank: 2`` / ``order: a b A B`` / ``name: torus1``.

    Blank lines and lines starting with ``#`` are ignored. ``rank`` is optional
    and checked against the order when present.

    Raises:
        ParseError: If a line or an edge-end cannot be read
        InvalidArgument: If the order is not a valid vertex order
    """
    fields: Dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if not sep or key not in ("rank", "order", "name"):
            raise ParseError(f"{source}:{number}: expected 'rank:', 'order:' or 'name:'", details={"line": raw})
        fields[key] = value.strip()

    if "order" not in fields:
        raise ParseError(f"{source}: missing 'order:' line")

    order = []
    for token in fields["order"].replace(",", " ").split():
        end = parse_word(token)
        if len(end) != 1:
            raise ParseError(f"{source}: {token!r} is not a single edge-end", details={"order": fields["order"]})
        order.append(end[0])

    surface = make_surface(order, name=fields.get("name") or None)
    if "rank" in fields:
        try:
            rank = int(fields["rank"])
        except ValueError as e:
            raise ParseError(f"{source}: rank must be an integer, got {fields['rank']!r}") from e
        if rank != surface.rank:
            raise InvalidArgument(f"{source}: rank {rank} does not match order of rank {surface.rank}")
    return surface


def load_surface_file(path: str) -> RibbonSurface:
    """Read a surface file; the file stem names the surface unless ``name:`` is given."""
    with open(path, encoding="utf-8") as handle:
        surface = parse_surface_text(handle.read(), source=path)
    if surface.name is None:
        stem = os.path.splitext(os.path.basename(path))[0]
        surface = surface.model_copy(update={"name": stem})
    logger.debug(f"Loaded surface file: {path}", extra={"extra_data": {"order": list(surface.vertex_order)}})
    return surface


def _from_surface_dir(name: str) -> Optional[RibbonSurface]:
    config = get_config()
    if not config.is_surface_dir_configured():
        return None
    path = os.path.join(config.surface_dir, name + SURFACE_SUFFIX)
    if os.path.isfile(path):
        return load_surface_file(path)
    return None


def get_surface(name_or_path: Optional[str] = None) -> RibbonSurface:
    """
    Resolve a surface by builtin name, file path or surface directory entry.

    Falls back to the configured default surface when no name is given.

    Raises:
        InvalidArgument: If nothing matches
    """
    key = (name_or_path or get_config().default_surface).strip()

    if key.lower() in SURFACE_REGISTRY:
        return SURFACE_REGISTRY[key.lower()]
    if os.path.isfile(key):
        return load_surface_file(key)

    surface = _from_surface_dir(key)
    if surface is not None:
        return surface

    supported = ", ".join(SURFACE_REGISTRY.keys())
    raise InvalidArgument(f"Unknown surface: {key}. Builtin surfaces: {supported}")


def register_surface(name: str, surface: RibbonSurface) -> None:
    """Add or replace a named surface."""
    SURFACE_REGISTRY[name.lower()] = surface
    logger.info(f"Registered surface: {name}")


def list_surfaces() -> list[str]:
    return list(SURFACE_REGISTRY.keys())
