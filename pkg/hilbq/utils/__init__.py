"""Model loading, export and pretty printing."""

from .load import from_dict, load, load_path, resolve_models
from .export import (series_to_json, series_from_json, table_to_json,
    dump_series, dump_table, dump_reports)
from .pprint import (format_coefficient, format_series, format_vector,
    PrettyPrinter, pprint, pformat)

__all__ = ["from_dict", "load", "load_path", "resolve_models",
    "series_to_json", "series_from_json", "table_to_json", "dump_series",
    "dump_table", "dump_reports", "format_coefficient", "format_series",
    "format_vector", "PrettyPrinter", "pprint", "pformat"]
