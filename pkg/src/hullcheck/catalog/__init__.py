"""Building and identifying minimal Type II configurations."""

from .build import SEARCH_TABLE, build_catalog, catalog_json, enumerate_added, label_linked, piece_format
from .compose import add_compose, make_quasi
from .equivalence import canonical_key, equivalent, flip_key, overlap_family
from .formats import AddFormat, LinkFormat, add_formats, format_label, link_formats, partitions_min2
from .search import SearchReport, lattice_search
from .store import UNKNOWN, CatalogEntry, CatalogMatch, get_entry, identify, load_catalog

__all__ = [
    "AddFormat",
    "LinkFormat",
    "CatalogEntry",
    "CatalogMatch",
    "SearchReport",
    "UNKNOWN",
    "SEARCH_TABLE",
    "partitions_min2",
    "add_formats",
    "link_formats",
    "format_label",
    "add_compose",
    "make_quasi",
    "overlap_family",
    "canonical_key",
    "flip_key",
    "equivalent",
    "identify",
    "load_catalog",
    "get_entry",
    "enumerate_added",
    "lattice_search",
    "label_linked",
    "piece_format",
    "build_catalog",
    "catalog_json",
]
